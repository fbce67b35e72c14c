//! Literal data of the fake projective plane: the 84 cubics in U0..U9, its ℤ₇:ℤ₃ action, the curve C,
//! the three smoothness minors, the g₇-fixed points, and the sextic-surface model.

pub mod data;

use std::sync::Arc;

use algebra_core::{
    AlgebraError, Field, Monomial, PolyRing, QuadExtField, QuadExtScalar, SparsePolynomial,
};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use data::RationalText;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DatasetError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("serialized stream is malformed: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, DatasetError>;

pub const NUM_EQUATIONS: usize = 84;
pub const NUM_U: usize = 10;

/// Ring names used throughout.
pub fn u_ring<K: Field>(field: K) -> Arc<PolyRing<K>> {
    PolyRing::with_prefix(field, "U", NUM_U)
}

pub fn y_ring<K: Field>(field: K) -> Arc<PolyRing<K>> {
    PolyRing::with_prefix(field, "y", 4)
}

pub fn chart_ring<K: Field>(field: K) -> Arc<PolyRing<K>> {
    PolyRing::new(field, &["Y0", "Y2", "Y3"])
}

pub fn t_ring<K: Field>(field: K) -> Arc<PolyRing<K>> {
    PolyRing::new(field, &["t"])
}

/// The action of g₇ (diagonal, by powers of a primitive seventh root ξ) and g₃ (a variable permutation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupActionSpec {
    /// Uᵢ ↦ ξ^{wᵢ} Uᵢ.
    pub g7_weights: [u32; NUM_U],
    /// g₃ replaces Uᵢ by U_{perm[i]} in a polynomial.
    pub g3_permutation: [usize; NUM_U],
}

impl Default for GroupActionSpec {
    fn default() -> Self {
        Self {
            g7_weights: [0, 6, 5, 3, 1, 2, 4, 1, 2, 4],
            g3_permutation: [0, 2, 3, 1, 5, 6, 4, 8, 9, 7],
        }
    }
}

impl GroupActionSpec {
    /// Σ eᵢ wᵢ mod 7.
    pub fn g7_weight(&self, m: &Monomial) -> u32 {
        m.weight(&self.g7_weights, 7)
    }

    /// The set of g₇-weights occurring in f.
    pub fn g7_weights_of<K: Field>(&self, f: &SparsePolynomial<K>) -> Vec<u32> {
        let mut w: Vec<u32> = f.terms().iter().map(|(m, _)| self.g7_weight(m)).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    /// Order of the permutation.
    pub fn g3_order(&self) -> usize {
        let mut cur: [usize; NUM_U] = std::array::from_fn(|i| i);
        for k in 1..=NUM_U {
            cur = std::array::from_fn(|i| self.g3_permutation[cur[i]]);
            if cur.iter().enumerate().all(|(i, &j)| i == j) {
                return k;
            }
        }
        unreachable!("permutations of 10 points have order dividing 2520")
    }

    /// True when w(perm(i)) ≡ k·w(i) mod 7 for a fixed k ∈ {2, 4}, so g₃ normalizes the diagonal g₇ action.
    pub fn normalizes_g7(&self) -> bool {
        let w = &self.g7_weights;
        [2u32, 4]
            .iter()
            .any(|&k| (0..NUM_U).all(|i| w[self.g3_permutation[i]] == (k * w[i]) % 7))
    }

    /// Images of the variables under g₃^k in `ring`.
    pub fn g3_images<K: Field>(
        &self,
        ring: &Arc<PolyRing<K>>,
        k: usize,
    ) -> Vec<SparsePolynomial<K>> {
        (0..NUM_U)
            .map(|i| {
                let mut j = i;
                for _ in 0..k % 3 {
                    j = self.g3_permutation[j];
                }
                SparsePolynomial::var(ring, j)
            })
            .collect()
    }

    /// g₃^k applied to f by variable replacement.
    pub fn apply_g3<K: Field>(
        &self,
        f: &SparsePolynomial<K>,
        k: usize,
    ) -> Result<SparsePolynomial<K>> {
        Ok(f.substitute(&self.g3_images(f.ring(), k))?)
    }
}

/// Where equation `k` (1-based) comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationSource {
    Printed,
    /// g₃^power applied to the equation with this number.
    Image {
        of: usize,
        power: usize,
    },
}

pub fn equation_source(k: usize) -> EquationSource {
    match k {
        5 | 8 | 11 => EquationSource::Image {
            of: k - 1,
            power: 1,
        },
        6 | 9 | 12 => EquationSource::Image {
            of: k - 2,
            power: 2,
        },
        37..=60 => EquationSource::Image {
            of: k - 24,
            power: 1,
        },
        61..=84 => EquationSource::Image {
            of: k - 48,
            power: 2,
        },
        _ => EquationSource::Printed,
    }
}

/// Parses a literal over ℚ(ω), optionally conjugates, and maps into the target field.
fn load<K: Field>(
    ring: &Arc<PolyRing<K>>,
    text: &str,
    conjugate: bool,
) -> Result<SparsePolynomial<K>> {
    let q = PolyRing::new(
        QuadExtField,
        &ring.vars.iter().map(String::as_str).collect::<Vec<_>>(),
    );
    let p = SparsePolynomial::parse_canonical(&q, text)?;
    let field = ring.field.clone();
    Ok(p.map_coefficients(ring, |c| {
        field.from_quad(&if conjugate { c.conj() } else { c.clone() })
    })?)
}

fn load_scalar<K: Field>(field: &K, text: &str, conjugate: bool) -> Result<K::Elem> {
    let q = QuadExtScalar::parse_canonical(text)?;
    Ok(field.from_quad(&if conjugate { q.conj() } else { q })?)
}

/// A published coefficient that the dataset replaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub equation: usize,
    pub monomial: [u16; NUM_U],
    pub printed: &'static str,
    pub corrected: &'static str,
}

/// The U5·U7·U9 coefficient of eq10 is printed as 2(1−ω)·4. With that value the 84 cubics cut out a
/// zero-dimensional scheme of degree 219; 2(1−ω)·2 gives HF(k) = 18k²−9k+1. An exhaustive search over
/// single-coefficient changes of weight-0 monomials in the base equations finds no other repair.
pub const ERRATA: &[Erratum] = &[Erratum {
    equation: 10,
    monomial: [0, 0, 0, 0, 0, 1, 0, 1, 0, 1],
    printed: "(8/1-8/1*w)",
    corrected: "(4/1-4/1*w)",
}];

fn apply_erratum<K: Field>(
    f: &SparsePolynomial<K>,
    e: &Erratum,
    conjugate: bool,
) -> Result<SparsePolynomial<K>> {
    let field = f.field();
    let m = Monomial::new(e.monomial.to_vec());
    let printed = load_scalar(field, e.printed, conjugate)?;
    if f.coefficient(&m) != printed {
        return Err(DatasetError::Malformed(format!(
            "eq{} does not carry the printed coefficient {}",
            e.equation, e.printed
        )));
    }
    let delta = field.sub(&load_scalar(field, e.corrected, conjugate)?, &printed);
    Ok(f + &SparsePolynomial::monomial(f.ring(), m, delta))
}

/// The base equations (numbers 1–4, 7, 10, 13–36) exactly as published.
pub fn printed_base_equations<K: Field>(
    ring: &Arc<PolyRing<K>>,
    conjugate: bool,
) -> Result<Vec<(usize, SparsePolynomial<K>)>> {
    data::BASE_EQUATIONS
        .iter()
        .map(|&(k, s)| Ok((k, load(ring, s, conjugate)?)))
        .collect()
}

/// The base equations with [`ERRATA`] applied.
pub fn base_equations<K: Field>(
    ring: &Arc<PolyRing<K>>,
    conjugate: bool,
) -> Result<Vec<(usize, SparsePolynomial<K>)>> {
    printed_base_equations(ring, conjugate)?
        .into_iter()
        .map(|(k, f)| {
            let f = ERRATA
                .iter()
                .filter(|e| e.equation == k)
                .try_fold(f, |f, e| apply_erratum(&f, e, conjugate))?;
            Ok((k, f))
        })
        .collect()
}

/// All 84 cubics from the given base equations: base equations verbatim, the rest as g₃-images.
pub fn expand_base<K: Field>(
    base: Vec<(usize, SparsePolynomial<K>)>,
    action: &GroupActionSpec,
) -> Result<Vec<SparsePolynomial<K>>> {
    let mut eqs: Vec<Option<SparsePolynomial<K>>> = vec![None; NUM_EQUATIONS + 1];
    for (k, f) in base {
        eqs[k] = Some(f);
    }
    for k in 1..=NUM_EQUATIONS {
        if let EquationSource::Image { of, power } = equation_source(k) {
            let src = eqs[of].as_ref().expect("sources precede images");
            eqs[k] = Some(action.apply_g3(src, power)?);
        }
    }
    Ok(eqs
        .into_iter()
        .skip(1)
        .map(|e| e.expect("all 84 filled"))
        .collect())
}

/// All 84 cubics with [`ERRATA`] applied.
pub fn expand_equations<K: Field>(
    ring: &Arc<PolyRing<K>>,
    action: &GroupActionSpec,
    conjugate: bool,
) -> Result<Vec<SparsePolynomial<K>>> {
    expand_base(base_equations(ring, conjugate)?, action)
}

/// U0, the six printed quadrics and their twelve g₃-images.
pub fn curve_c_generators<K: Field>(
    ring: &Arc<PolyRing<K>>,
    action: &GroupActionSpec,
    conjugate: bool,
) -> Result<Vec<SparsePolynomial<K>>> {
    let mut out = vec![SparsePolynomial::var(ring, 0)];
    let quads = data::CURVE_C_QUADRICS
        .iter()
        .map(|s| load(ring, s, conjugate))
        .collect::<Result<Vec<_>>>()?;
    for power in 0..3 {
        for q in &quads {
            out.push(action.apply_g3(q, power)?);
        }
    }
    Ok(out)
}

/// Equation rows (1-based) and variable columns of a 7×7 Jacobian minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorSelection {
    pub rows: [usize; 7],
    pub cols: [usize; 7],
}

impl MinorSelection {
    pub fn zero_based_rows(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r - 1).collect()
    }

    pub fn is_valid(&self) -> bool {
        let distinct = |v: &[usize]| (0..v.len()).all(|i| !v[..i].contains(&v[i]));
        distinct(&self.rows)
            && distinct(&self.cols)
            && self.rows.iter().all(|&r| (1..=NUM_EQUATIONS).contains(&r))
            && self.cols.iter().all(|&c| c < NUM_U)
    }
}

/// The three minors whose common zero locus on Z is empty.
pub fn minor_selections() -> [MinorSelection; 3] {
    [
        MinorSelection {
            rows: [8, 19, 29, 43, 55, 61, 79],
            cols: [0, 1, 2, 3, 5, 6, 7],
        },
        MinorSelection {
            rows: [7, 19, 31, 37, 55, 67, 77],
            cols: [0, 1, 2, 3, 4, 5, 9],
        },
        MinorSelection {
            rows: [9, 13, 31, 43, 53, 67, 79],
            cols: [0, 1, 2, 3, 4, 8, 9],
        },
    ]
}

/// Coordinate points of U9, U8, U7: the fixed points of g₇ on Z.
pub fn fixed_points<K: Field>(field: &K) -> [Vec<K::Elem>; 3] {
    [9, 8, 7].map(|j| {
        (0..NUM_U)
            .map(|i| if i == j { field.one() } else { field.zero() })
            .collect()
    })
}

/// A rational function num/den.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<K: Field> {
    pub num: SparsePolynomial<K>,
    pub den: SparsePolynomial<K>,
}

impl<K: Field> RationalFunction<K> {
    pub fn evaluate(&self, point: &[K::Elem]) -> Option<K::Elem> {
        let f = self.num.field();
        let d = self.den.evaluate(point).ok()?;
        f.div(&self.num.evaluate(point).ok()?, &d)
    }
}

fn load_rational<K: Field>(
    ring: &Arc<PolyRing<K>>,
    r: &RationalText,
    conjugate: bool,
) -> Result<RationalFunction<K>> {
    Ok(RationalFunction {
        num: load(ring, r.num, conjugate)?,
        den: load(ring, r.den, conjugate)?,
    })
}

/// The sextic model in y0..y3 with its curves, maps and functions.
#[derive(Clone, Debug, PartialEq)]
pub struct SexticData<K: Field> {
    pub f: SparsePolynomial<K>,
    pub h0: SparsePolynomial<K>,
    pub conic_a1p: SparsePolynomial<K>,
    pub cone1: SparsePolynomial<K>,
    pub cone2: SparsePolynomial<K>,
    pub s1p: [SparsePolynomial<K>; 4],
    pub s1pp: [SparsePolynomial<K>; 4],
    pub point_c1: Vec<K::Elem>,
    pub point_b1p: Vec<K::Elem>,
    pub y2p: RationalFunction<K>,
    pub y3p: RationalFunction<K>,
    pub y2pp: RationalFunction<K>,
    pub y3pp: RationalFunction<K>,
    pub z_seventh: RationalFunction<K>,
    pub z_cofactor: RationalFunction<K>,
    pub embed_ra_z: RationalFunction<K>,
    pub embed_rb_z: RationalFunction<K>,
}

impl<K: Field> SexticData<K> {
    pub fn load(field: K, conjugate: bool) -> Result<Self> {
        let y = y_ring(field.clone());
        let t = t_ring(field.clone());
        let ch = chart_ring(field.clone());
        let curve = |c: &[&str; 4]| -> Result<[SparsePolynomial<K>; 4]> {
            let v = c
                .iter()
                .map(|s| load(&t, s, conjugate))
                .collect::<Result<Vec<_>>>()?;
            Ok(v.try_into().expect("four coordinates"))
        };
        let point = |c: &[&str; 4]| {
            c.iter()
                .map(|s| load_scalar(&field, s, conjugate))
                .collect::<Result<Vec<_>>>()
        };
        Ok(Self {
            f: load(&y, data::SEXTIC, conjugate)?,
            h0: load(&y, data::CONIC_H0, conjugate)?,
            conic_a1p: load(&y, data::CONIC_A1P, conjugate)?,
            cone1: load(&y, data::CONE_1, conjugate)?,
            cone2: load(&y, data::CONE_2, conjugate)?,
            s1p: curve(&data::CURVE_S1P)?,
            s1pp: curve(&data::CURVE_S1PP)?,
            point_c1: point(&data::POINT_C1)?,
            point_b1p: point(&data::POINT_B1P)?,
            y2p: load_rational(&ch, &data::MAP_Y2P, conjugate)?,
            y3p: load_rational(&ch, &data::MAP_Y3P, conjugate)?,
            y2pp: load_rational(&ch, &data::MAP_Y2PP, conjugate)?,
            y3pp: load_rational(&ch, &data::MAP_Y3PP, conjugate)?,
            z_seventh: load_rational(&ch, &data::Z_SEVENTH_POWER, conjugate)?,
            z_cofactor: load_rational(&ch, &data::Z_COFACTOR, conjugate)?,
            embed_ra_z: load_rational(&ch, &data::EMBED_RA_TIMES_Z, conjugate)?,
            embed_rb_z: load_rational(&ch, &data::EMBED_RB_TIMES_Z, conjugate)?,
        })
    }

    /// Every polynomial of the model in a fixed order.
    pub fn polynomials(&self) -> Vec<&SparsePolynomial<K>> {
        let mut v = vec![&self.f, &self.h0, &self.conic_a1p, &self.cone1, &self.cone2];
        v.extend(self.s1p.iter());
        v.extend(self.s1pp.iter());
        for r in [
            &self.y2p,
            &self.y3p,
            &self.y2pp,
            &self.y3pp,
            &self.z_seventh,
            &self.z_cofactor,
            &self.embed_ra_z,
            &self.embed_rb_z,
        ] {
            v.push(&r.num);
            v.push(&r.den);
        }
        v
    }
}

/// All literal data over one coefficient field.
#[derive(Clone, Debug)]
pub struct DatasetBundle<K: Field> {
    pub action: GroupActionSpec,
    pub equations: Vec<SparsePolynomial<K>>,
    pub curve_c: Vec<SparsePolynomial<K>>,
    pub minors: [MinorSelection; 3],
    pub sextic: SexticData<K>,
    pub conjugated: bool,
}

impl<K: Field> DatasetBundle<K> {
    /// Loads over `field`; with `conjugate` the coefficients are mapped by ω ↦ −ω first.
    pub fn load(field: K, conjugate: bool) -> Result<Self> {
        let action = GroupActionSpec::default();
        let u = u_ring(field.clone());
        Ok(Self {
            equations: expand_equations(&u, &action, conjugate)?,
            curve_c: curve_c_generators(&u, &action, conjugate)?,
            minors: minor_selections(),
            sextic: SexticData::load(field, conjugate)?,
            action,
            conjugated: conjugate,
        })
    }

    pub fn u_ring(&self) -> &Arc<PolyRing<K>> {
        self.equations[0].ring()
    }
}

/// The 84 cubics, one canonical line each.
pub fn serialize_equations<K: Field>(eqs: &[SparsePolynomial<K>]) -> String {
    eqs.iter().map(|e| e.to_canonical() + "\n").collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Section headers and line counts of the bundle stream, in order.
const SECTIONS: [(&str, usize); 5] = [
    ("equations", 84),
    ("curve_c", 19),
    ("sextic", 5),
    ("curves", 8),
    ("rational", 16),
];

/// Every dataset polynomial in the canonical grammar, one per line, under `# section` headers.
/// Points are not polynomials and are omitted. Returns the stream and its SHA-256.
pub fn canonical_serialize<K: Field>(d: &DatasetBundle<K>) -> (String, String) {
    let polys = d.sextic.polynomials();
    let mut out = String::new();
    let mut push_section = |name: &str, items: &[&SparsePolynomial<K>]| {
        out.push_str(&format!("# {name}\n"));
        for p in items {
            out.push_str(&p.to_canonical());
            out.push('\n');
        }
    };
    push_section("equations", &d.equations.iter().collect::<Vec<_>>());
    push_section("curve_c", &d.curve_c.iter().collect::<Vec<_>>());
    push_section("sextic", &polys[..5]);
    push_section("curves", &polys[5..13]);
    push_section("rational", &polys[13..]);
    let digest = sha256_hex(out.as_bytes());
    (out, digest)
}

/// Parses a stream produced by [`canonical_serialize`] back into polynomials, by section.
pub fn parse_serialized<K: Field>(
    field: &K,
    text: &str,
) -> Result<Vec<(String, Vec<SparsePolynomial<K>>)>> {
    let mut lines = text.lines();
    let mut out = Vec::new();
    for (name, count) in SECTIONS {
        let header = lines
            .next()
            .ok_or_else(|| DatasetError::Malformed(format!("missing section {name}")))?;
        if header != format!("# {name}") {
            return Err(DatasetError::Malformed(format!(
                "expected section {name}, found {header}"
            )));
        }
        let ring = match name {
            "equations" | "curve_c" => u_ring(field.clone()),
            "sextic" => y_ring(field.clone()),
            "curves" => t_ring(field.clone()),
            _ => chart_ring(field.clone()),
        };
        let mut polys = Vec::with_capacity(count);
        for _ in 0..count {
            let l = lines
                .next()
                .ok_or_else(|| DatasetError::Malformed(format!("section {name} is short")))?;
            polys.push(SparsePolynomial::parse_canonical(&ring, l)?);
        }
        out.push((name.to_string(), polys));
    }
    if lines.next().is_some() {
        return Err(DatasetError::Malformed("trailing lines".into()));
    }
    Ok(out)
}

/// The shipped text asset with the 84 cubics and its digest file.
pub const FPP84_EQS: &str = include_str!("../assets/fpp84.eqs");
pub const FPP84_EQS_SHA256: &str = include_str!("../assets/fpp84.eqs.sha256");

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::PrimeField;

    fn q_bundle() -> DatasetBundle<QuadExtField> {
        DatasetBundle::load(QuadExtField, false).unwrap()
    }

    #[test]
    fn counts() {
        let d = q_bundle();
        assert_eq!(d.equations.len(), 84);
        assert_eq!(d.curve_c.len(), 19);
        assert!(d
            .equations
            .iter()
            .all(|e| e.homogeneous_degree() == Some(3)));
        assert!(d.curve_c[1..]
            .iter()
            .all(|e| e.homogeneous_degree() == Some(2)));
    }

    #[test]
    fn erratum_touches_one_coefficient() {
        let ring = u_ring(QuadExtField);
        let printed = printed_base_equations(&ring, false).unwrap();
        let fixed = base_equations(&ring, false).unwrap();
        for ((k, p), (_, f)) in printed.iter().zip(&fixed) {
            let diff = f - p;
            if *k == 10 {
                assert_eq!(diff.len(), 1);
                let (m, c) = &diff.terms()[0];
                assert_eq!(m.exponents(), &[0, 0, 0, 0, 0, 1, 0, 1, 0, 1]);
                assert_eq!(*c, QuadExtScalar::from_ints(-4, 4));
            } else {
                assert!(diff.is_zero(), "eq{k}");
            }
        }
    }

    #[test]
    fn orbit_identities() {
        let d = q_bundle();
        let a = &d.action;
        let e = |k: usize| &d.equations[k - 1];
        assert_eq!(&a.apply_g3(e(4), 1).unwrap(), e(5));
        assert_eq!(&a.apply_g3(e(4), 2).unwrap(), e(6));
        assert_eq!(&a.apply_g3(e(13), 1).unwrap(), e(37));
        assert_eq!(&a.apply_g3(e(61), 1).unwrap(), e(13));
        assert_eq!(&a.apply_g3(e(4), 3).unwrap(), e(4));
        for k in 1..=3 {
            assert_eq!(&a.apply_g3(e(k), 1).unwrap(), e(k));
        }
    }

    #[test]
    fn action_structure() {
        let a = GroupActionSpec::default();
        assert_eq!(a.g3_order(), 3);
        assert!(a.normalizes_g7());
        let u = |e: &[u16]| Monomial::new(e.to_vec());
        assert_eq!(a.g7_weight(&u(&[0, 1, 1, 1, 0, 0, 0, 0, 0, 0])), 0);
        assert_eq!(a.g7_weight(&u(&[3, 0, 0, 0, 0, 0, 0, 0, 0, 0])), 0);
        assert_eq!(a.g7_weight(&u(&[0, 0, 0, 2, 1, 0, 0, 0, 0, 0])), 0);
    }

    #[test]
    fn first_line_leads_with_u1u2u3() {
        let d = q_bundle();
        let (s, digest) = canonical_serialize(&d);
        assert!(s
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("(1/1+0/1*w)*U1*U2*U3+"));
        assert_eq!(digest.len(), 64);
    }

    #[test]
    fn serialization_round_trips() {
        let d = q_bundle();
        let (s, digest) = canonical_serialize(&d);
        let back = parse_serialized(&QuadExtField, &s).unwrap();
        let mut again = String::new();
        for (name, polys) in &back {
            again.push_str(&format!("# {name}\n"));
            for p in polys {
                again.push_str(&p.to_canonical());
                again.push('\n');
            }
        }
        assert_eq!(again, s);
        assert_eq!(sha256_hex(again.as_bytes()), digest);
        assert_eq!(back[0].1, d.equations);
    }

    #[test]
    fn asset_matches_dataset() {
        let d = q_bundle();
        let text = serialize_equations(&d.equations);
        assert_eq!(text, FPP84_EQS);
        assert_eq!(sha256_hex(text.as_bytes()), FPP84_EQS_SHA256.trim());
    }

    #[test]
    fn loads_over_prime_field_and_conjugates() {
        let f = PrimeField::new(263, 16).unwrap();
        let d = DatasetBundle::load(f, false).unwrap();
        let c = DatasetBundle::load(f.conjugate(), true).unwrap();
        assert_eq!(d.equations.len(), 84);
        // conjugating the data and the chosen root together gives the same residues
        let a: Vec<String> = d.equations.iter().map(|e| e.to_canonical()).collect();
        let b: Vec<String> = c.equations.iter().map(|e| e.to_canonical()).collect();
        assert_eq!(a, b);
        let q = DatasetBundle::load(QuadExtField, true).unwrap();
        assert_ne!(q.equations[0], q_bundle().equations[0]);
    }

    #[test]
    fn minors_are_valid() {
        assert!(minor_selections().iter().all(MinorSelection::is_valid));
        let pts = fixed_points(&PrimeField::new(263, 16).unwrap());
        assert_eq!(pts[0][9], 1);
        assert_eq!(pts[2][7], 1);
    }
}

#[cfg(test)]
mod emit {
    #[test]
    #[ignore]
    fn write_assets() {
        let d = super::DatasetBundle::load(algebra_core::QuadExtField, false).unwrap();
        let text = super::serialize_equations(&d.equations);
        std::fs::write(
            concat!(env!("CARGO_MANIFEST_DIR"), "/assets/fpp84.eqs"),
            &text,
        )
        .unwrap();
        std::fs::write(
            concat!(env!("CARGO_MANIFEST_DIR"), "/assets/fpp84.eqs.sha256"),
            super::sha256_hex(text.as_bytes()) + "\n",
        )
        .unwrap();
    }
}
