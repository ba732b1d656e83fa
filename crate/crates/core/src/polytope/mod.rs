//! Lattice polytopes: hulls with primitive facet inequalities, face
//! enumeration with lattice charts, adjacent polytopes, lattice lengths,
//! reflexivity and unimodular supports.

pub mod dd;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lattice::{bareiss_determinant_i128, ExponentVector, LatticeChart};
use crate::laurent::LaurentPolynomial;
use crate::{Error, Result};

/// The inequality `⟨u, x⟩ ≥ −a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub u: ExponentVector,
    pub a: i64,
}

impl Facet {
    /// Lattice height of `x` above the facet hyperplane, `⟨u, x⟩ + a`.
    pub fn height(&self, x: &ExponentVector) -> i64 {
        self.u.dot(x) + self.a
    }
}

/// A lattice polytope. Facet inequalities are expressed in the coordinates
/// of `chart`, the lattice chart of the affine hull; for a full-dimensional
/// polytope the chart is the identity and facets are ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    rank: usize,
    dim: usize,
    chart: LatticeChart,
    vertices: Vec<ExponentVector>,
    coords: Vec<ExponentVector>,
    facets: Vec<Facet>,
    incidence: Vec<FixedBitSet>,
}

impl LatticePolytope {
    /// Convex hull of a nonempty set of lattice points.
    pub fn hull(points: &[ExponentVector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput("point list"))?;
        let rank = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != rank) {
            return Err(Error::RankMismatch { expected: rank, found: p.len() });
        }
        let pts: Vec<ExponentVector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let spanning = LatticeChart::spanning(&pts)?;
        let chart = if spanning.rank() == rank { LatticeChart::standard(rank) } else { spanning };
        let dim = chart.rank();
        let coords: Vec<ExponentVector> =
            pts.iter().map(|p| chart.coordinates(p).expect("points lie on their own chart")).collect();

        if dim == 0 {
            return Ok(Self {
                rank,
                dim,
                chart,
                vertices: pts,
                coords,
                facets: Vec::new(),
                incidence: Vec::new(),
            });
        }

        let rows: Vec<Vec<i64>> = coords
            .iter()
            .map(|c| std::iter::once(1).chain(c.as_slice().iter().copied()).collect())
            .collect();
        let mut facets: Vec<Facet> = dd::extreme_rays(&rows, dim + 1)?
            .into_iter()
            .map(|r| {
                let u = ExponentVector::new(r[1..].to_vec());
                let g = u.content();
                Facet { u: u.primitive(), a: r[0] / g.max(1) }
            })
            .collect();
        facets.sort();

        // A point is a vertex iff it is the only point on all its facets.
        let tight: Vec<FixedBitSet> = facets
            .iter()
            .map(|f| {
                let mut b = FixedBitSet::with_capacity(pts.len());
                coords.iter().enumerate().filter(|(_, c)| f.height(c) == 0).for_each(|(i, _)| b.insert(i));
                b
            })
            .collect();
        let keep: Vec<usize> = (0..pts.len())
            .filter(|&i| {
                let mut common = FixedBitSet::with_capacity(pts.len());
                common.insert_range(..);
                let mut any = false;
                for t in tight.iter().filter(|t| t.contains(i)) {
                    common.intersect_with(t);
                    any = true;
                }
                any && common.count_ones(..) == 1
            })
            .collect();
        let vertices: Vec<ExponentVector> = keep.iter().map(|&i| pts[i].clone()).collect();
        let coords: Vec<ExponentVector> = keep.iter().map(|&i| coords[i].clone()).collect();
        let incidence = facets
            .iter()
            .map(|f| {
                let mut b = FixedBitSet::with_capacity(coords.len());
                coords.iter().enumerate().filter(|(_, c)| f.height(c) == 0).for_each(|(i, _)| b.insert(i));
                b
            })
            .collect();
        Ok(Self { rank, dim, chart, vertices, coords, facets, incidence })
    }

    /// The polytope `{x : ⟨u, x⟩ ≥ −a}` in ℤ^rank. Must be bounded, nonempty
    /// and have lattice vertices.
    pub fn from_inequalities(rank: usize, facets: &[Facet]) -> Result<Self> {
        if let Some(f) = facets.iter().find(|f| f.u.len() != rank) {
            return Err(Error::RankMismatch { expected: rank, found: f.u.len() });
        }
        let mut rows: Vec<Vec<i64>> =
            facets.iter().map(|f| std::iter::once(f.a).chain(f.u.as_slice().iter().copied()).collect()).collect();
        let mut t_row = vec![0; rank + 1];
        t_row[0] = 1;
        rows.push(t_row);
        let rays = dd::extreme_rays(&rows, rank + 1).map_err(|e| match e {
            Error::InvalidArgument(_) => Error::Unbounded,
            e => e,
        })?;
        let mut vertices = Vec::new();
        for r in rays {
            let t = r[0];
            if t == 0 {
                return Err(Error::Unbounded);
            }
            if r[1..].iter().any(|x| x % t != 0) {
                return Err(Error::NonLatticeVertex);
            }
            vertices.push(ExponentVector::new(r[1..].iter().map(|x| x / t).collect()));
        }
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Self::hull(&vertices)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.rank
    }

    pub fn chart(&self) -> &LatticeChart {
        &self.chart
    }

    /// Vertices in ambient coordinates, sorted lexicographically.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// Vertices in chart coordinates (same order as `vertices`).
    pub fn vertex_coordinates(&self) -> &[ExponentVector] {
        &self.coords
    }

    /// Facet inequalities in chart coordinates, sorted.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the vertices on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> Vec<usize> {
        self.incidence[i].ones().collect()
    }

    pub fn contains(&self, x: &ExponentVector) -> bool {
        match self.chart.coordinates(x) {
            Some(c) => self.facets.iter().all(|f| f.height(&c) >= 0),
            None => false,
        }
    }

    /// Lattice points satisfying `keep`, found by scanning the bounding box
    /// in chart coordinates.
    pub fn lattice_points_where<F: Fn(&ExponentVector) -> bool>(&self, keep: F) -> Vec<ExponentVector> {
        let d = self.dim;
        let lo: Vec<i64> = (0..d).map(|i| self.coords.iter().map(|c| c[i]).min().unwrap_or(0)).collect();
        let hi: Vec<i64> = (0..d).map(|i| self.coords.iter().map(|c| c[i]).max().unwrap_or(0)).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let c = ExponentVector::new(cur.clone());
            if self.facets.iter().all(|f| f.height(&c) >= 0) {
                let p = self.chart.embed(&c);
                if keep(&p) {
                    out.push(p);
                }
            }
            let mut i = 0;
            loop {
                if i == d {
                    out.sort();
                    return out;
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i];
                i += 1;
            }
        }
    }

    pub fn lattice_points(&self) -> Vec<ExponentVector> {
        self.lattice_points_where(|_| true)
    }

    /// All faces of dimension `d`, in canonical order (sorted active facet
    /// index sets). `d = dim` yields the polytope itself.
    pub fn faces(&self, d: usize) -> Result<Vec<Face>> {
        if d > self.dim {
            return Err(Error::FaceDimension { requested: d, dim: self.dim });
        }
        let nv = self.vertices.len();
        let mut all = FixedBitSet::with_capacity(nv);
        all.insert_range(..);
        let mut level: Vec<FixedBitSet> = vec![all];
        for _ in d..self.dim {
            let mut seen: HashSet<FixedBitSet> = HashSet::new();
            let mut next = Vec::new();
            for g in &level {
                let cands: Vec<FixedBitSet> = self
                    .incidence
                    .iter()
                    .filter(|f| !g.is_subset(f))
                    .map(|f| {
                        let mut c = g.clone();
                        c.intersect_with(f);
                        c
                    })
                    .filter(|c| c.count_ones(..) > 0)
                    .collect();
                for (i, c) in cands.iter().enumerate() {
                    let maximal = cands.iter().enumerate().all(|(j, o)| i == j || !c.is_subset(o) || c == o);
                    if maximal && seen.insert(c.clone()) {
                        next.push(c.clone());
                    }
                }
            }
            level = next;
        }
        let mut faces = level.into_iter().map(|bits| self.face_from_bits(&bits, d)).collect::<Result<Vec<_>>>()?;
        faces.sort_by(|a, b| a.active_facets.cmp(&b.active_facets));
        Ok(faces)
    }

    fn face_from_bits(&self, bits: &FixedBitSet, dim: usize) -> Result<Face> {
        let active_facets: Vec<usize> = (0..self.facets.len()).filter(|&i| bits.is_subset(&self.incidence[i])).collect();
        let vertices: Vec<ExponentVector> = bits.ones().map(|i| self.vertices[i].clone()).collect();
        let polytope = Self::hull(&vertices)?;
        debug_assert_eq!(polytope.dim(), dim);
        Ok(Face { dim, active_facets, vertices, polytope })
    }

    /// The face cut out by the given facets (all of them tight).
    pub fn face_of_facets(&self, active: &[usize]) -> Result<Face> {
        let mut bits = FixedBitSet::with_capacity(self.vertices.len());
        bits.insert_range(..);
        for &i in active {
            let inc = self.incidence.get(i).ok_or_else(|| Error::NotAFacet(format!("index {i}")))?;
            bits.intersect_with(inc);
        }
        if bits.count_ones(..) == 0 {
            return Err(Error::InvalidArgument("facets have empty intersection".into()));
        }
        let vertices: Vec<ExponentVector> = bits.ones().map(|i| self.vertices[i].clone()).collect();
        let dim = Self::hull(&vertices)?.dim();
        self.face_from_bits(&bits, dim)
    }

    /// The smallest face containing all of `points` (which must lie in the
    /// polytope).
    pub fn face_containing(&self, points: &[ExponentVector]) -> Result<Face> {
        let mut active = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let mut all_tight = true;
            for p in points {
                let c = self.chart.coordinates(p).ok_or_else(|| Error::NotAFace(p.to_string()))?;
                let h = f.height(&c);
                if h < 0 {
                    return Err(Error::NotAFace(format!("{p} lies outside the polytope")));
                }
                all_tight &= h == 0;
            }
            if all_tight {
                active.push(i);
            }
        }
        self.face_of_facets(&active)
    }

    /// Normal cone of a face: the inner normals of its facets.
    pub fn normal_cone(&self, face: &Face) -> Result<NormalCone> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim, rank: self.rank });
        }
        Ok(NormalCone { rays: face.active_facets.iter().map(|&i| self.facets[i].u.clone()).collect() })
    }

    /// Lattice points of the polytope at height exactly 1 above facet `i`.
    pub fn adjacent_polytope(&self, i: usize) -> Result<Vec<ExponentVector>> {
        let f = self.facets.get(i).ok_or_else(|| Error::NotAFacet(format!("index {i}")))?.clone();
        let chart = self.chart.clone();
        Ok(self.lattice_points_where(|p| chart.coordinates(p).is_some_and(|c| f.height(&c) == 1)))
    }

    /// Index of the facet with normal `u` (chart coordinates).
    pub fn facet_index(&self, u: &ExponentVector) -> Option<usize> {
        self.facets.iter().position(|f| f.u == *u)
    }

    /// Whether all facets sit at lattice distance 1 from the origin.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim, rank: self.rank });
        }
        Ok(self.facets.iter().all(|f| f.a == 1))
    }

    /// The dilation `k·P`.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        Self::hull(&self.vertices.iter().map(|v| v.scale(k)).collect::<Vec<_>>())
    }

    /// Polygon vertices in chart coordinates, counterclockwise.
    pub fn polygon_cycle(&self) -> Result<Vec<ExponentVector>> {
        if self.dim != 2 {
            return Err(Error::InvalidArgument(format!("expected a polygon, got dimension {}", self.dim)));
        }
        Ok(counterclockwise(&self.coords))
    }

    /// An affine lattice isomorphism `x ↦ A·x + b` of the plane carrying this
    /// polygon (in chart coordinates) onto `target`, if one exists.
    pub fn polygon_equivalence(&self, target: &LatticePolytope) -> Result<Option<AffineMap2>> {
        let src = self.polygon_cycle()?;
        let dst = target.polygon_cycle()?;
        Ok(polygon_equivalence(&src, &dst))
    }
}

/// An integral affine map of the plane, `x ↦ A·x + b`, with `|det A| = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap2 {
    pub a: [[i64; 2]; 2],
    pub b: [i64; 2],
}

impl AffineMap2 {
    pub fn apply(&self, x: &ExponentVector) -> ExponentVector {
        ExponentVector::new(vec![
            self.a[0][0] * x[0] + self.a[0][1] * x[1] + self.b[0],
            self.a[1][0] * x[0] + self.a[1][1] * x[1] + self.b[1],
        ])
    }
}

fn counterclockwise(points: &[ExponentVector]) -> Vec<ExponentVector> {
    let n = points.len() as i64;
    let cx: i64 = points.iter().map(|p| p[0]).sum();
    let cy: i64 = points.iter().map(|p| p[1]).sum();
    // Directions from the centroid, scaled by n to stay integral.
    let dir = |p: &ExponentVector| (n * p[0] - cx, n * p[1] - cy);
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    let mut out = points.to_vec();
    out.sort_by(|p, q| {
        let (a, b) = (dir(p), dir(q));
        half(a).cmp(&half(b)).then_with(|| (b.0 as i128 * a.1 as i128).cmp(&(a.0 as i128 * b.1 as i128)))
    });
    out
}

fn polygon_equivalence(src: &[ExponentVector], dst: &[ExponentVector]) -> Option<AffineMap2> {
    let n = src.len();
    if n != dst.len() || n < 3 {
        return None;
    }
    for reversed in [false, true] {
        let order: Vec<ExponentVector> =
            if reversed { src.iter().rev().cloned().collect() } else { src.to_vec() };
        for start in 0..n {
            let s0 = &order[start];
            let s1 = &order[(start + 1) % n];
            let s2 = &order[(start + n - 1) % n];
            let (d1, d2) = (s1 - s0, s2 - s0);
            let (t1, t2) = (&dst[1] - &dst[0], &dst[n - 1] - &dst[0]);
            // A·[d1 d2] = [t1 t2]  ⇒  A = T·D⁻¹
            let det = d1[0] * d2[1] - d2[0] * d1[1];
            if det == 0 {
                continue;
            }
            let inv = [[d2[1], -d2[0]], [-d1[1], d1[0]]];
            let t = [[t1[0], t2[0]], [t1[1], t2[1]]];
            let mut a = [[0i64; 2]; 2];
            let mut integral = true;
            for i in 0..2 {
                for j in 0..2 {
                    let v = t[i][0] * inv[0][j] + t[i][1] * inv[1][j];
                    if v % det != 0 {
                        integral = false;
                    }
                    a[i][j] = v / det;
                }
            }
            if !integral || (a[0][0] * a[1][1] - a[0][1] * a[1][0]).abs() != 1 {
                continue;
            }
            let b = [dst[0][0] - a[0][0] * s0[0] - a[0][1] * s0[1], dst[0][1] - a[1][0] * s0[0] - a[1][1] * s0[1]];
            let map = AffineMap2 { a, b };
            let ok = (0..n).all(|k| map.apply(&order[(start + k) % n]) == dst[k]);
            if ok {
                return Some(map);
            }
        }
    }
    None
}

/// A face of a polytope together with its own lattice chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// Indices (into the parent's facet list) of the facets containing the face.
    pub active_facets: Vec<usize>,
    /// Ambient vertices, sorted.
    pub vertices: Vec<ExponentVector>,
    /// The face as a polytope; its chart is based at the smallest vertex.
    pub polytope: LatticePolytope,
}

impl Face {
    pub fn chart(&self) -> &LatticeChart {
        self.polytope.chart()
    }

    pub fn lattice_points(&self) -> Vec<ExponentVector> {
        self.polytope.lattice_points()
    }

    pub fn contains(&self, x: &ExponentVector) -> bool {
        self.polytope.contains(x)
    }

    pub fn summary(&self) -> FaceSummary {
        FaceSummary { dim: self.dim, vertices: self.vertices.clone(), active_facets: self.active_facets.clone() }
    }
}

/// Serializable description of a face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSummary {
    pub dim: usize,
    pub vertices: Vec<ExponentVector>,
    pub active_facets: Vec<usize>,
}

/// A cone in the dual lattice given by generating rays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalCone {
    pub rays: Vec<ExponentVector>,
}

impl NormalCone {
    pub fn ray(u: ExponentVector) -> Self {
        Self { rays: vec![u] }
    }
}

/// Points of `c` minimizing every ray of the cone: `{y : ⟨u, x − y⟩ ≥ 0 for
/// all u, x}`. An empty ray list selects everything.
pub fn min_weight_subset(c: &[ExponentVector], rays: &[ExponentVector]) -> Vec<ExponentVector> {
    let mins: Vec<Option<i64>> = rays.iter().map(|u| c.iter().map(|x| u.dot(x)).min()).collect();
    let mut out: Vec<ExponentVector> = c
        .iter()
        .filter(|y| rays.iter().zip(&mins).all(|(u, m)| Some(u.dot(y)) == *m))
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Number of lattice points on a segment minus one.
pub fn lattice_length(points: &[ExponentVector]) -> Result<i64> {
    let a = points.iter().min().ok_or(Error::EmptyInput("segment"))?;
    let b = points.iter().max().expect("nonempty");
    let d = b - a;
    for p in points {
        let e = p - a;
        for i in 0..d.len() {
            for j in i + 1..d.len() {
                if e[i] as i128 * d[j] as i128 != e[j] as i128 * d[i] as i128 {
                    return Err(Error::NotCollinear);
                }
            }
        }
    }
    Ok(d.content())
}

/// Result of testing a point set for unimodular support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularSupport {
    pub ok: bool,
    /// For each vertex `v`, the primitive edge directions `w − v`; present
    /// only when `ok`.
    pub vertex_bases: Option<BTreeMap<ExponentVector, Vec<ExponentVector>>>,
}

/// Checks that at every vertex of the hull, each edge has a point of the
/// set at lattice distance 1 and these steps form a basis of the lattice of
/// the affine hull.
pub fn unimodular_support(points: &[ExponentVector]) -> Result<UnimodularSupport> {
    let hull = LatticePolytope::hull(points)?;
    let set: BTreeSet<&ExponentVector> = points.iter().collect();
    let d = hull.dim();
    let fail = UnimodularSupport { ok: false, vertex_bases: None };
    let mut bases = BTreeMap::new();
    if d == 0 {
        bases.insert(hull.vertices()[0].clone(), Vec::new());
        return Ok(UnimodularSupport { ok: true, vertex_bases: Some(bases) });
    }
    let edges = hull.faces(1)?;
    for v in hull.vertices() {
        let mut steps = Vec::new();
        for e in edges.iter().filter(|e| e.vertices.contains(v)) {
            let w = e.vertices.iter().find(|w| *w != v).expect("edges have two vertices");
            let step = (w - v).primitive();
            if !set.contains(&(v + &step)) {
                return Ok(fail);
            }
            steps.push(step);
        }
        if steps.len() != d {
            return Ok(fail);
        }
        let rows: Option<Vec<Vec<i128>>> = steps
            .iter()
            .map(|s| hull.chart().linear_coordinates(s).map(|c| c.as_slice().iter().map(|&x| x as i128).collect()))
            .collect();
        let det = rows.and_then(bareiss_determinant_i128);
        if det.map(i128::abs) != Some(1) {
            return Ok(fail);
        }
        steps.sort();
        bases.insert(v.clone(), steps);
    }
    Ok(UnimodularSupport { ok: true, vertex_bases: Some(bases) })
}

pub fn is_unimodular_support(points: &[ExponentVector]) -> Result<bool> {
    Ok(unimodular_support(points)?.ok)
}

/// Newton polytope of a nonzero polynomial.
pub fn newton_polytope(p: &LaurentPolynomial) -> Result<LatticePolytope> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    LatticePolytope::hull(&p.support())
}

/// The terms of `p` on the face, translated to the face chart's base point
/// and written in the chart's basis. Checks that the face is a face of
/// `NP(p)`.
pub fn face_chart_polynomial(p: &LaurentPolynomial, face: &Face) -> Result<LaurentPolynomial> {
    let np = newton_polytope(p)?;
    if face.vertices.iter().any(|v| num_traits::Zero::is_zero(&p.coefficient(v))) {
        return Err(Error::NotAFace("a face vertex is not in the support".into()));
    }
    let smallest = np.face_containing(&face.vertices)?;
    if smallest.vertices != face.vertices {
        return Err(Error::NotAFace(format!("{:?}", face.vertices)));
    }
    chart_polynomial(p, face)
}

/// As [`face_chart_polynomial`] without the face check.
pub fn chart_polynomial(p: &LaurentPolynomial, face: &Face) -> Result<LaurentPolynomial> {
    let chart = face.chart();
    let terms = p
        .terms()
        .filter(|(e, _)| face.contains(e))
        .map(|(e, c)| (chart.coordinates(e).expect("face points lie on the chart"), c.clone()));
    LaurentPolynomial::from_terms(chart.rank(), terms)
}

#[derive(Serialize, Deserialize)]
struct PolytopeInput {
    rank: usize,
    vertices: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct PolytopeOutput<'a> {
    rank: usize,
    dim: usize,
    vertices: &'a [ExponentVector],
    facets: &'a [Facet],
    #[serde(skip_serializing_if = "Option::is_none")]
    affine_hull: Option<&'a LatticeChart>,
}

impl Serialize for LatticePolytope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeOutput {
            rank: self.rank,
            dim: self.dim,
            vertices: &self.vertices,
            facets: &self.facets,
            affine_hull: (!self.is_full_dimensional()).then_some(&self.chart),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolytopeInput::deserialize(d)?;
        if let Some(v) = raw.vertices.iter().find(|v| v.len() != raw.rank) {
            return Err(D::Error::custom(format!("vertex {v:?} does not have rank {}", raw.rank)));
        }
        let pts: Vec<ExponentVector> = raw.vertices.into_iter().map(ExponentVector::new).collect();
        LatticePolytope::hull(&pts).map_err(D::Error::custom)
    }
}
