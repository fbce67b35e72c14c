//! Random points on the chart F(Y0, Y2, Y3) = f(Y0, 1, Y2, Y3) over GF(p), and the rational-map
//! identities checked on them: ρ preserves F, ρ⁻¹∘ρ = id, ρ³ = id, and the z-transport law.

use std::collections::BTreeMap;

use algebra_core::{seventh_root_exponent, Field, PrimeField, SparsePolynomial};
use fpp_dataset::{chart_ring, SexticData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, SexticError};
use crate::roots::{roots, UniPoly};

/// Chart coordinates (Y0, Y2, Y3).
pub type ChartPoint = [u32; 3];

/// The chart equation, ρ, ρ⁻¹, w, g and the embedding functions over GF(p).
#[derive(Clone, Debug)]
pub struct ChartMaps {
    pub field: PrimeField,
    pub chart: SparsePolynomial<PrimeField>,
    pub data: SexticData<PrimeField>,
    /// e with 7e ≡ 1 mod p−1, when it exists.
    pub seventh_root_exponent: Option<u64>,
}

impl ChartMaps {
    pub fn new(field: PrimeField, conjugate: bool) -> Result<Self> {
        let data = SexticData::load(field, conjugate)?;
        let ch = chart_ring(field);
        let v = |i| SparsePolynomial::var(&ch, i);
        let chart = data
            .f
            .substitute(&[v(0), SparsePolynomial::one(&ch), v(1), v(2)])?;
        let e = seventh_root_exponent(field.modulus());
        Ok(Self {
            field,
            chart,
            data,
            seventh_root_exponent: e,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn on_surface(&self, y: &ChartPoint) -> bool {
        self.chart.evaluate(y).is_ok_and(|v| v == 0)
    }

    /// ρ(Y) = (Y0, Y2', Y3').
    pub fn rho(&self, y: &ChartPoint) -> Option<ChartPoint> {
        Some([y[0], self.data.y2p.evaluate(y)?, self.data.y3p.evaluate(y)?])
    }

    /// ρ⁻¹(Y) = (Y0, Y2'', Y3'').
    pub fn rho_inv(&self, y: &ChartPoint) -> Option<ChartPoint> {
        Some([
            y[0],
            self.data.y2pp.evaluate(y)?,
            self.data.y3pp.evaluate(y)?,
        ])
    }

    /// σ(Y0, Y2, Y3) = (−Y0, −Y2, Y3).
    pub fn sigma(&self, y: &ChartPoint) -> ChartPoint {
        let f = &self.field;
        [f.neg(&y[0]), f.neg(&y[1]), y[2]]
    }

    /// w = z⁷.
    pub fn w(&self, y: &ChartPoint) -> Option<u32> {
        self.data.z_seventh.evaluate(y)
    }

    /// g with z∘ρ = z²·g.
    pub fn z_cofactor(&self, y: &ChartPoint) -> Option<u32> {
        self.data.z_cofactor.evaluate(y)
    }

    /// The unique seventh root of w.
    pub fn z(&self, y: &ChartPoint) -> Option<u32> {
        Some(self.field.pow(&self.w(y)?, self.seventh_root_exponent?))
    }

    /// F(·, Y2, Y3) as a univariate polynomial in Y0.
    pub fn y0_polynomial(&self, y2: u32, y3: u32) -> UniPoly {
        let f = &self.field;
        let mut c = vec![0u64; 7];
        for (m, a) in self.chart.terms() {
            let e = m.exponents();
            let v = f.mul(
                a,
                &f.mul(&f.pow(&y2, e[1] as u64), &f.pow(&y3, e[2] as u64)),
            );
            let slot = &mut c[e[0] as usize];
            *slot = u64::from(f.add(&(*slot as u32), &v));
        }
        UniPoly::new(self.modulus(), c)
    }

    /// Y0 ≠ 0 and every chart map along the ρ-orbit and at σ(Y) is defined, with w(Y) ≠ 0.
    pub fn admissible(&self, y: &ChartPoint) -> bool {
        if y[0] == 0 || self.w(y).is_none_or(|w| w == 0) || self.w(&self.sigma(y)).is_none() {
            return false;
        }
        let mut cur = *y;
        for _ in 0..3 {
            if self.rho_inv(&cur).is_none()
                || self.z_cofactor(&cur).is_none()
                || self.w(&cur).is_none()
            {
                return false;
            }
            match self.rho(&cur) {
                Some(next) => cur = next,
                None => return false,
            }
        }
        true
    }
}

/// A sampled point with its z = w^e, exportable as a JSON line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampledPoint {
    #[serde(rename = "Y0")]
    pub y0: u32,
    #[serde(rename = "Y2")]
    pub y2: u32,
    #[serde(rename = "Y3")]
    pub y3: u32,
    pub z: Option<u32>,
}

impl SampledPoint {
    pub fn chart(&self) -> ChartPoint {
        [self.y0, self.y2, self.y3]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub samples: usize,
    pub seed: u64,
    /// Draw budget per requested point.
    pub draws_per_point: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        Self {
            samples: 100,
            seed: 42,
            draws_per_point: 50,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SampleStats {
    pub draws: usize,
    pub rootless_draws: usize,
    pub excluded_points: usize,
    /// Fraction of draws whose sextic in Y0 had a root.
    pub root_rate: f64,
}

/// Points are drawn in fixed chunks, each with its own ChaCha stream, so the output does not depend on
/// the number of worker threads.
const CHUNK: usize = 10;

fn sample_chunk(
    maps: &ChartMaps,
    seed: u64,
    chunk: usize,
    want: usize,
    budget: usize,
) -> (Vec<SampledPoint>, SampleStats) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    let p = maps.modulus();
    let mut out = Vec::with_capacity(want);
    let mut st = SampleStats::default();
    while out.len() < want && st.draws < budget {
        st.draws += 1;
        let (y2, y3) = (rng.random_range(0..p) as u32, rng.random_range(0..p) as u32);
        let uni = maps.y0_polynomial(y2, y3);
        if uni.degree() < 1 {
            st.rootless_draws += 1;
            continue;
        }
        let rs = roots(&uni, &mut rng);
        if rs.is_empty() {
            st.rootless_draws += 1;
            continue;
        }
        let y0 = rs[rng.random_range(0..rs.len())] as u32;
        let y = [y0, y2, y3];
        if !maps.admissible(&y) {
            st.excluded_points += 1;
            continue;
        }
        out.push(SampledPoint {
            y0,
            y2,
            y3,
            z: maps.z(&y),
        });
    }
    (out, st)
}

/// N admissible points on F = 0, deterministic in the seed.
pub fn sample_surface_points(
    maps: &ChartMaps,
    opts: &SampleOptions,
) -> Result<(Vec<SampledPoint>, SampleStats)> {
    let n = opts.samples;
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<(Vec<SampledPoint>, SampleStats)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let want = CHUNK.min(n - c * CHUNK);
            sample_chunk(maps, opts.seed, c, want, want * opts.draws_per_point)
        })
        .collect();
    let mut st = SampleStats::default();
    let mut pts = Vec::with_capacity(n);
    for (p, s) in parts {
        pts.extend(p);
        st.draws += s.draws;
        st.rootless_draws += s.rootless_draws;
        st.excluded_points += s.excluded_points;
    }
    st.root_rate = if st.draws == 0 {
        0.0
    } else {
        (st.draws - st.rootless_draws) as f64 / st.draws as f64
    };
    if pts.len() < n {
        return Err(SexticError::InsufficientPoints {
            wanted: n,
            got: pts.len(),
            draws: st.draws,
        });
    }
    Ok((pts, st))
}

/// Per-assertion failure counts over a point set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SamplingReport {
    pub points: usize,
    pub failures: BTreeMap<String, usize>,
    /// Points where one side of an assertion was undefined.
    pub skipped: BTreeMap<String, usize>,
}

impl SamplingReport {
    fn with_keys(points: usize, keys: &[&str]) -> Self {
        let z = || keys.iter().map(|k| (k.to_string(), 0)).collect();
        Self {
            points,
            failures: z(),
            skipped: z(),
        }
    }

    fn fail(&mut self, key: &str) {
        *self.failures.entry(key.into()).or_default() += 1;
    }

    fn skip(&mut self, key: &str) {
        *self.skipped.entry(key.into()).or_default() += 1;
    }

    pub fn passed(&self) -> bool {
        self.points > 0 && self.failures.values().all(|&n| n == 0)
    }
}

/// ρ preserves F = 0, ρ⁻¹(ρ(Y)) = Y and ρ³(Y) = Y at every point.
pub fn verify_automorphism_order3(maps: &ChartMaps, points: &[SampledPoint]) -> SamplingReport {
    let keys = [
        "surface_preserved",
        "inverse_composition",
        "third_iterate",
        "y0_fixed",
    ];
    let mut r = SamplingReport::with_keys(points.len(), &keys);
    for p in points {
        let y = p.chart();
        let Some(r1) = maps.rho(&y) else {
            keys.iter().for_each(|k| r.skip(k));
            continue;
        };
        if !maps.on_surface(&r1) {
            r.fail("surface_preserved");
        }
        if r1[0] != y[0] {
            r.fail("y0_fixed");
        }
        match maps.rho_inv(&r1) {
            Some(back) if back == y => {}
            Some(_) => r.fail("inverse_composition"),
            None => r.skip("inverse_composition"),
        }
        match maps.rho(&r1).and_then(|r2| maps.rho(&r2)) {
            Some(r3) if r3 == y => {}
            Some(_) => r.fail("third_iterate"),
            None => r.skip("third_iterate"),
        }
    }
    r
}

/// The z-transport law in both orientations of ρ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    /// (z²·g(Y))⁷ = w(ρ(Y)) with ρ the Y2', Y3' map, and w(σ(Y)) = w(Y).
    pub stated: SamplingReport,
    /// (z²·g(Y))⁷ = w(ρ⁻¹(Y)) with ρ⁻¹ the Y2'', Y3'' map.
    pub inverse_orientation: SamplingReport,
}

impl TransportReport {
    pub fn passed(&self) -> bool {
        self.stated.passed()
    }
}

/// z = w(Y)^e; checks the transport law against ρ and against ρ⁻¹, and w(σ(Y)) = w(Y).
pub fn verify_z_transport(maps: &ChartMaps, points: &[SampledPoint]) -> Result<TransportReport> {
    let e = maps
        .seventh_root_exponent
        .ok_or(SexticError::SeventhRootUndefined(maps.modulus()))?;
    let f = &maps.field;
    let mut r = SamplingReport::with_keys(points.len(), &["transport_law", "sigma_symmetry"]);
    let mut inverse =
        SamplingReport::with_keys(points.len(), &["transport_law_inverse_orientation"]);
    for p in points {
        let y = p.chart();
        let lhs = maps.w(&y).zip(maps.z_cofactor(&y)).map(|(w, g)| {
            let z = f.pow(&w, e);
            f.pow(&f.mul(&f.mul(&z, &z), &g), 7)
        });
        match (lhs, maps.rho(&y).and_then(|ry| maps.w(&ry))) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), Some(_)) => r.fail("transport_law"),
            _ => r.skip("transport_law"),
        }
        match (lhs, maps.rho_inv(&y).and_then(|ry| maps.w(&ry))) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), Some(_)) => inverse.fail("transport_law_inverse_orientation"),
            _ => inverse.skip("transport_law_inverse_orientation"),
        }
        match (maps.w(&y), maps.w(&maps.sigma(&y))) {
            (Some(a), Some(b)) if a == b => {}
            (Some(_), Some(_)) => r.fail("sigma_symmetry"),
            _ => r.skip("sigma_symmetry"),
        }
    }
    Ok(TransportReport {
        stated: r,
        inverse_orientation: inverse,
    })
}

/// Building blocks of the embedding coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    One,
    /// (Y2² − Y3²)·z / (Y0² − 1).
    RU1,
    /// First embedding function, R_a = (R_a·z)/z.
    Ra,
    /// Second embedding function, R_b = (R_b·z)/z.
    Rb,
}

/// Coordinate i is `scalings[i] · gen_i ∘ ρ^{k_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingAssignment {
    pub coords: [(Generator, u8); 10],
}

impl Default for EmbeddingAssignment {
    fn default() -> Self {
        use Generator::*;
        Self {
            coords: [
                (One, 0),
                (RU1, 0),
                (RU1, 1),
                (RU1, 2),
                (Ra, 0),
                (Ra, 1),
                (Ra, 2),
                (Rb, 0),
                (Rb, 1),
                (Rb, 2),
            ],
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub points_used: usize,
    pub points_skipped: usize,
    pub evaluations: usize,
    pub nonvanishing: usize,
    pub scalings: Vec<u32>,
    pub assignment: Vec<String>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.points_used > 0 && self.nonvanishing == 0
    }
}

fn generator_value(maps: &ChartMaps, g: Generator, y: &ChartPoint, z: u32) -> Option<u32> {
    let f = &maps.field;
    match g {
        Generator::One => Some(1),
        Generator::RU1 => {
            let num = f.mul(&f.sub(&f.mul(&y[1], &y[1]), &f.mul(&y[2], &y[2])), &z);
            f.div(&num, &f.sub(&f.mul(&y[0], &y[0]), &1))
        }
        Generator::Ra => f.div(&maps.data.embed_ra_z.evaluate(y)?, &z),
        Generator::Rb => f.div(&maps.data.embed_rb_z.evaluate(y)?, &z),
    }
}

/// Evaluates the 84 cubics at the U-vectors built from `assignment` and `scalings`; exploratory.
pub fn verify_embedding_samples(
    maps: &ChartMaps,
    cubics: &[SparsePolynomial<PrimeField>],
    points: &[SampledPoint],
    assignment: &EmbeddingAssignment,
    scalings: &[u32; 10],
) -> Result<EmbeddingReport> {
    if scalings.iter().all(|&s| s % maps.modulus() as u32 == 0) {
        return Err(SexticError::DegenerateScaling);
    }
    let f = &maps.field;
    let mut r = EmbeddingReport {
        scalings: scalings.to_vec(),
        assignment: assignment
            .coords
            .iter()
            .map(|(g, k)| format!("{g:?}∘ρ^{k}"))
            .collect(),
        ..Default::default()
    };
    'points: for p in points {
        // ρ-orbit of (Y, z) with z∘ρ = z²·g
        let mut orbit = Vec::with_capacity(3);
        let (mut y, mut z) = (p.chart(), p.z);
        for _ in 0..3 {
            let Some(zz) = z.filter(|&v| v != 0) else {
                r.points_skipped += 1;
                continue 'points;
            };
            orbit.push((y, zz));
            let next = maps.rho(&y).zip(maps.z_cofactor(&y));
            let Some((ny, g)) = next else {
                r.points_skipped += 1;
                continue 'points;
            };
            z = Some(f.mul(&f.mul(&zz, &zz), &g));
            y = ny;
        }
        let mut u = Vec::with_capacity(10);
        for ((g, k), s) in assignment.coords.iter().zip(scalings) {
            let (yk, zk) = orbit[*k as usize % 3];
            match generator_value(maps, *g, &yk, zk) {
                Some(v) => u.push(f.mul(&v, &(s % maps.modulus() as u32))),
                None => {
                    r.points_skipped += 1;
                    continue 'points;
                }
            }
        }
        r.points_used += 1;
        for c in cubics {
            r.evaluations += 1;
            if c.evaluate(&u)? != 0 {
                r.nonvanishing += 1;
            }
        }
    }
    Ok(r)
}

/// JSON lines `{"Y0":…,"Y2":…,"Y3":…,"z":…}`.
pub fn to_jsonl(points: &[SampledPoint]) -> String {
    points
        .iter()
        .map(|p| serde_json::to_string(p).expect("plain integers") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maps() -> ChartMaps {
        ChartMaps::new(PrimeField::new(263, 16).unwrap(), false).unwrap()
    }

    #[test]
    fn sampled_points_lie_on_the_chart() {
        let m = maps();
        let (pts, st) = sample_surface_points(
            &m,
            &SampleOptions {
                samples: 30,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(pts.len(), 30);
        assert!(pts.iter().all(|p| m.on_surface(&p.chart()) && p.y0 != 0));
        assert!(st.root_rate > 0.0);
    }

    #[test]
    fn sampling_is_deterministic() {
        let m = maps();
        let o = SampleOptions {
            samples: 25,
            seed: 9,
            ..Default::default()
        };
        assert_eq!(
            sample_surface_points(&m, &o).unwrap().0,
            sample_surface_points(&m, &o).unwrap().0
        );
        let other = SampleOptions {
            seed: 10,
            ..o.clone()
        };
        assert_ne!(
            sample_surface_points(&m, &o).unwrap().0,
            sample_surface_points(&m, &other).unwrap().0
        );
    }

    #[test]
    fn automorphism_and_transport_hold() {
        let m = maps();
        let (pts, _) = sample_surface_points(
            &m,
            &SampleOptions {
                samples: 40,
                seed: 42,
                ..Default::default()
            },
        )
        .unwrap();
        let a = verify_automorphism_order3(&m, &pts);
        assert!(a.passed(), "{a:?}");
        let z = verify_z_transport(&m, &pts).unwrap();
        assert_eq!(z.stated.failures["sigma_symmetry"], 0);
        assert!(z.inverse_orientation.passed(), "{z:?}");
    }

    #[test]
    fn cofactor_transports_along_the_inverse_map() {
        let m = maps();
        let (pts, _) = sample_surface_points(
            &m,
            &SampleOptions {
                samples: 20,
                seed: 7,
                ..Default::default()
            },
        )
        .unwrap();
        let z = verify_z_transport(&m, &pts).unwrap();
        assert_eq!(z.stated.failures["transport_law"], 20);
        assert_eq!(
            z.inverse_orientation.failures["transport_law_inverse_orientation"],
            0
        );
    }

    #[test]
    fn seventh_roots_need_p_not_1_mod_7() {
        let m = ChartMaps::new(PrimeField::with_smallest_root(29).unwrap(), false).unwrap();
        assert_eq!(
            verify_z_transport(&m, &[]),
            Err(SexticError::SeventhRootUndefined(29))
        );
    }

    #[test]
    fn zero_scalings_rejected() {
        let m = maps();
        let r = verify_embedding_samples(&m, &[], &[], &EmbeddingAssignment::default(), &[0; 10]);
        assert_eq!(r, Err(SexticError::DegenerateScaling));
    }

    #[test]
    fn jsonl_shape() {
        let s = to_jsonl(&[SampledPoint {
            y0: 1,
            y2: 2,
            y3: 3,
            z: Some(4),
        }]);
        assert_eq!(s, "{\"Y0\":1,\"Y2\":2,\"Y3\":3,\"z\":4}\n");
    }
}
