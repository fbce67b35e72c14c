//! Intersection matrices of the 24 curves S₁…S₂'', A₁…C₂'' on the double cover X and the search over
//! the six unknown pairings S_i·A₁^{(m)}. A configuration survives when its Gram matrix fits in a
//! hyperbolic lattice of rank at most h^{1,1}(X) = 20: rank ≤ 20 and at most one positive eigenvalue.

mod rank;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use rank::{
    characteristic_polynomial, inertia, rank_bareiss, smith_invariants, Inertia, SmithError,
};

pub const NUM_CURVES: usize = 24;
/// Upper bound for the Picard rank of X.
pub const MAX_PICARD_RANK: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("S1·A1{prime} + S2·A1{prime} = {got}, but the case requires {want}")]
    ConstraintViolation {
        prime: &'static str,
        got: u32,
        want: u32,
    },
    #[error(transparent)]
    Smith(#[from] SmithError),
    #[error("integer overflow in the characteristic polynomial")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, LatticeError>;

const PRIMES: [&str; 3] = ["", "'", "''"];

/// The two possible triples (S·A, S·A', S·A'') on the quotient surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    One,
    Two,
}

impl Case {
    pub const ALL: [Case; 2] = [Case::One, Case::Two];

    pub fn triple(self) -> [u32; 3] {
        match self {
            Case::One => [1, 0, 2],
            Case::Two => [0, 2, 1],
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Case::One => 1,
            Case::Two => 2,
        }
    }
}

/// (S₁A₁, S₁A₁', S₁A₁'', S₂A₁, S₂A₁', S₂A₁'') within one case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveConfiguration {
    pub case: Case,
    pub assignment: [u32; 6],
}

impl CurveConfiguration {
    pub fn new(case: Case, assignment: [u32; 6]) -> Result<Self> {
        let c = Self { case, assignment };
        c.validate()?;
        Ok(c)
    }

    /// S₁A₁^{(m)} + S₂A₁^{(m)} must equal the case's S·A^{(m)}.
    pub fn validate(&self) -> Result<()> {
        for (m, want) in self.case.triple().into_iter().enumerate() {
            let got = self.assignment[m] + self.assignment[3 + m];
            if got != want {
                return Err(LatticeError::ConstraintViolation {
                    prime: PRIMES[m],
                    got,
                    want,
                });
            }
        }
        Ok(())
    }

    /// S_i·A_j^{(m)} for sheets i, j ∈ {0, 1}; fiber 2 follows from σ: S_i·A₂^{(m)} = S_{1−i}·A₁^{(m)}.
    fn s_dot_a(&self, i: usize, j: usize, m: usize) -> i64 {
        let s = if j == 0 { i } else { 1 - i };
        i64::from(self.assignment[3 * s + m])
    }
}

impl fmt::Display for CurveConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.assignment;
        write!(
            f,
            "case {} ({},{},{},{},{},{})",
            self.case.number(),
            a[0],
            a[1],
            a[2],
            a[3],
            a[4],
            a[5]
        )
    }
}

/// How the order-three automorphism acts on the sheet index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum RhoConvention {
    /// ρ(X_i) = X_i'.
    #[default]
    SheetPreserving,
    /// ρ(X_i) = X_{3−i}'.
    SheetSwapping,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GramOptions {
    pub s_self_intersection: i64,
    pub rho: RhoConvention,
}

impl Default for GramOptions {
    fn default() -> Self {
        Self {
            s_self_intersection: -3,
            rho: RhoConvention::SheetPreserving,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    S,
    A,
    B,
    C,
}

/// A curve by kind, sheet (0, 1) and translate (0, 1, 2 for none, ', '').
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Curve {
    kind: Kind,
    sheet: usize,
    translate: usize,
}

impl Curve {
    /// Order S₁,S₂,S₁',S₂',S₁'',S₂'', A₁,B₁,C₁,A₁',…,C₁'', A₂,…,C₂''.
    fn from_index(idx: usize) -> Self {
        if idx < 6 {
            return Self {
                kind: Kind::S,
                sheet: idx % 2,
                translate: idx / 2,
            };
        }
        let j = idx - 6;
        let r = j % 9;
        Self {
            kind: [Kind::A, Kind::B, Kind::C][r % 3],
            sheet: j / 9,
            translate: r / 3,
        }
    }

    /// Position on the I₉ cycle A−B−C−A'−…−C''−A.
    fn cycle_position(&self) -> usize {
        3 * self.translate + self.kind as usize - 1
    }
}

pub fn curve_name(idx: usize) -> String {
    let c = Curve::from_index(idx);
    format!("{:?}{}{}", c.kind, c.sheet + 1, PRIMES[c.translate])
}

/// Symmetric 24×24 intersection matrix in the [`curve_name`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix24(pub [[i64; NUM_CURVES]; NUM_CURVES]);

impl GramMatrix24 {
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..NUM_CURVES).all(|i| (0..NUM_CURVES).all(|j| self.0[i][j] == self.0[j][i]))
    }

    /// Conjugation by the permutation exchanging sheet 1 and sheet 2 of every curve.
    pub fn sheet_swapped(&self) -> Self {
        let swap = |i: usize| if i < 6 { i ^ 1 } else { 6 + (i - 6 + 9) % 18 };
        let mut m = [[0; NUM_CURVES]; NUM_CURVES];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.0[swap(i)][swap(j)];
            }
        }
        Self(m)
    }

    pub fn submatrix(&self, idx: &[usize]) -> Vec<Vec<i64>> {
        idx.iter()
            .map(|&i| idx.iter().map(|&j| self.0[i][j]).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_bareiss(&self.rows())
    }

    /// Whether the two I₉ fibers meet every curve in the same number of points.
    pub fn fibers_numerically_equal(&self) -> bool {
        self.0
            .iter()
            .all(|r| r[6..15].iter().sum::<i64>() == r[15..24].iter().sum::<i64>())
    }

    /// Intersection numbers S_i·(first fiber) for the six S curves.
    pub fn s_fiber_degrees(&self) -> Vec<i64> {
        self.0[..6].iter().map(|r| r[6..15].iter().sum()).collect()
    }

    /// Indices of the S curves meeting curve `idx` (or the fiber curves meeting an S curve).
    pub fn neighbours(&self, idx: usize) -> Vec<String> {
        (0..NUM_CURVES)
            .filter(|&j| j != idx && self.0[idx][j] != 0)
            .map(curve_name)
            .collect()
    }
}

/// S_i^{(k)}·X_j^{(m)}, transported back to k = 0 along ρ^{−k}.
fn s_dot_fiber(cfg: &CurveConfiguration, opts: &GramOptions, s: Curve, x: Curve) -> i64 {
    let k = s.translate;
    let flip = opts.rho == RhoConvention::SheetSwapping && k % 2 == 1;
    let (i, j) = if flip {
        (1 - s.sheet, 1 - x.sheet)
    } else {
        (s.sheet, x.sheet)
    };
    let m = (x.translate + 3 - k) % 3;
    match x.kind {
        Kind::A => cfg.s_dot_a(i, j, m),
        Kind::B => i64::from(i == j && m == 0),
        Kind::C | Kind::S => 0,
    }
}

/// Fills the matrix from the six pairings by σ- and ρ-equivariance.
pub fn build_gram(cfg: &CurveConfiguration, opts: &GramOptions) -> Result<GramMatrix24> {
    cfg.validate()?;
    let mut m = [[0i64; NUM_CURVES]; NUM_CURVES];
    for (p, row) in m.iter_mut().enumerate() {
        let a = Curve::from_index(p);
        for (q, v) in row.iter_mut().enumerate() {
            let b = Curve::from_index(q);
            *v = match (a.kind, b.kind) {
                _ if p == q => {
                    if a.kind == Kind::S {
                        opts.s_self_intersection
                    } else {
                        -2
                    }
                }
                (Kind::S, Kind::S) => 0,
                (Kind::S, _) => s_dot_fiber(cfg, opts, a, b),
                (_, Kind::S) => s_dot_fiber(cfg, opts, b, a),
                _ => {
                    let d = (a.cycle_position() + 9 - b.cycle_position()) % 9;
                    i64::from(a.sheet == b.sheet && (d == 1 || d == 8))
                }
            };
        }
    }
    Ok(GramMatrix24(m))
}

/// Rank of the nine components of the first I₉ fiber.
pub fn fiber_rank(g: &GramMatrix24) -> usize {
    rank_bareiss(&g.submatrix(&(6..15).collect::<Vec<_>>()))
}

/// Every assignment with each unknown bounded by its constraint sum, in lexicographic order.
pub fn candidate_assignments(case: Case) -> Vec<[u32; 6]> {
    let t = case.triple();
    let mut out = Vec::new();
    for a0 in 0..=t[0] {
        for a1 in 0..=t[1] {
            for a2 in 0..=t[2] {
                for a3 in 0..=t[0] {
                    for a4 in 0..=t[1] {
                        for a5 in 0..=t[2] {
                            out.push([a0, a1, a2, a3, a4, a5]);
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationResult {
    pub configuration: CurveConfiguration,
    pub rank: usize,
    pub rank_smith: usize,
    pub positive_eigenvalues: usize,
    pub negative_eigenvalues: usize,
    /// S_i·(fiber) for the six S curves; 2 for a 2-section.
    pub s_fiber_degrees: Vec<i64>,
    pub fibers_numerically_equal: bool,
    /// Rank ≤ 20.
    pub within_rank_bound: bool,
    /// Rank ≤ 20 and at most one positive eigenvalue.
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub options: GramOptions,
    pub candidates: usize,
    pub rejected_by_constraints: usize,
    pub results: Vec<ConfigurationResult>,
    /// Configurations passing the rank bound alone.
    pub rank_bound_survivors: Vec<CurveConfiguration>,
    pub survivors: Vec<CurveConfiguration>,
    pub survivor_ranks: Vec<usize>,
    pub ranks_agree: bool,
}

impl SearchReport {
    /// True iff the single survivor is Case 2 with (0,1,0,0,1,1) at rank 19.
    pub fn matches_expected(&self) -> bool {
        let want = CurveConfiguration {
            case: Case::Two,
            assignment: [0, 1, 0, 0, 1, 1],
        };
        self.survivors == [want] && self.survivor_ranks == [19] && self.ranks_agree
    }

    /// One line per feasible configuration.
    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "case,s1a1,s1a1p,s1a1pp,s2a1,s2a1p,s2a1pp,rank,rank_smith,positive,negative,fibers_equal,within_rank_bound,survives\n",
        );
        for r in &self.results {
            let a = r.configuration.assignment;
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.configuration.case.number(),
                a[0],
                a[1],
                a[2],
                a[3],
                a[4],
                a[5],
                r.rank,
                r.rank_smith,
                r.positive_eigenvalues,
                r.negative_eigenvalues,
                r.fibers_numerically_equal,
                r.within_rank_bound,
                r.survives
            ));
        }
        s
    }
}

/// Ranks every feasible configuration of both cases and keeps those fitting in a hyperbolic lattice of
/// rank ≤ 20.
pub fn enumerate_configurations(opts: &GramOptions) -> Result<SearchReport> {
    let mut results = Vec::new();
    let mut candidates = 0;
    let mut rejected = 0;
    for case in Case::ALL {
        for a in candidate_assignments(case) {
            candidates += 1;
            let Ok(cfg) = CurveConfiguration::new(case, a) else {
                rejected += 1;
                continue;
            };
            let g = build_gram(&cfg, opts)?;
            let rows = g.rows();
            let rank = rank_bareiss(&rows);
            let rank_smith = smith_invariants(&rows)?.len();
            let inertia = inertia(&rows).ok_or(LatticeError::Overflow)?;
            let within_rank_bound = rank <= MAX_PICARD_RANK;
            results.push(ConfigurationResult {
                configuration: cfg,
                rank,
                rank_smith,
                positive_eigenvalues: inertia.positive,
                negative_eigenvalues: inertia.negative,
                s_fiber_degrees: g.s_fiber_degrees(),
                fibers_numerically_equal: g.fibers_numerically_equal(),
                within_rank_bound,
                survives: within_rank_bound && inertia.positive <= 1,
            });
        }
    }
    let ranks_agree = results.iter().all(|r| {
        r.rank == r.rank_smith && r.rank == r.positive_eigenvalues + r.negative_eigenvalues
    });
    let pick =
        |f: fn(&ConfigurationResult) -> bool| results.iter().filter(|r| f(r)).collect::<Vec<_>>();
    let surv = pick(|r| r.survives);
    Ok(SearchReport {
        options: *opts,
        candidates,
        rejected_by_constraints: rejected,
        rank_bound_survivors: pick(|r| r.within_rank_bound)
            .iter()
            .map(|r| r.configuration)
            .collect(),
        survivors: surv.iter().map(|r| r.configuration).collect(),
        survivor_ranks: surv.iter().map(|r| r.rank).collect(),
        ranks_agree,
        results,
    })
}

/// The default search and its three variants: S² = −2, sheet-swapping ρ, and both.
pub fn variant_searches() -> Result<Vec<SearchReport>> {
    let mut out = Vec::new();
    for s_self_intersection in [-3, -2] {
        for rho in [RhoConvention::SheetPreserving, RhoConvention::SheetSwapping] {
            out.push(enumerate_configurations(&GramOptions {
                s_self_intersection,
                rho,
            })?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eq4() -> CurveConfiguration {
        CurveConfiguration::new(Case::Two, [0, 1, 0, 0, 1, 1]).unwrap()
    }

    #[test]
    fn names_follow_the_index_order() {
        let names: Vec<String> = (0..NUM_CURVES).map(curve_name).collect();
        assert_eq!(
            &names[..7],
            ["S1", "S2", "S1'", "S2'", "S1''", "S2''", "A1"]
        );
        assert_eq!(names[14], "C1''");
        assert_eq!(names[23], "C2''");
    }

    #[test]
    fn s1_row_of_the_survivor() {
        let g = build_gram(&eq4(), &GramOptions::default()).unwrap();
        assert_eq!(g.neighbours(0), ["B1", "A1'", "A2'", "A2''"]);
        assert_eq!(g.neighbours(1), ["A1'", "A1''", "B2", "A2'"]);
        assert!(g
            .0
            .iter()
            .all(|r| r.iter().filter(|&&v| v == 1).count() >= 2));
    }

    #[test]
    fn diagonal_entries() {
        let g = build_gram(&eq4(), &GramOptions::default()).unwrap();
        let diag: Vec<i64> = (0..NUM_CURVES).map(|i| g.0[i][i]).collect();
        assert_eq!(diag.iter().filter(|&&d| d == -3).count(), 6);
        assert_eq!(diag.iter().filter(|&&d| d == -2).count(), 18);
    }

    #[test]
    fn rho_transport_example() {
        let g = build_gram(&eq4(), &GramOptions::default()).unwrap();
        // S₁'·A₁'' = S₁·A₁'
        assert_eq!(g.0[2][12], g.0[0][9]);
    }

    #[test]
    fn all_zero_case_two_rejected() {
        assert_eq!(
            CurveConfiguration::new(Case::Two, [0; 6]),
            Err(LatticeError::ConstraintViolation {
                prime: "'",
                got: 0,
                want: 2
            })
        );
    }

    #[test]
    fn fiber_has_rank_eight() {
        assert_eq!(
            fiber_rank(&build_gram(&eq4(), &GramOptions::default()).unwrap()),
            8
        );
    }

    #[test]
    fn unique_survivor() {
        let r = enumerate_configurations(&GramOptions::default()).unwrap();
        assert!(
            r.matches_expected(),
            "{:?} {:?}",
            r.survivors,
            r.survivor_ranks
        );
        assert_eq!(r.results.len(), 12);
        assert_eq!(r.candidates - r.rejected_by_constraints, 12);
    }

    #[test]
    fn rank_bound_alone_leaves_four() {
        let r = enumerate_configurations(&GramOptions::default()).unwrap();
        let a: Vec<_> = r
            .rank_bound_survivors
            .iter()
            .map(|c| (c.case.number(), c.assignment))
            .collect();
        assert_eq!(
            a,
            [
                (1, [1, 0, 1, 0, 0, 1]),
                (1, [1, 0, 2, 0, 0, 0]),
                (2, [0, 1, 0, 0, 1, 1]),
                (2, [0, 2, 1, 0, 0, 0])
            ]
        );
        for c in r
            .results
            .iter()
            .filter(|c| c.within_rank_bound && !c.survives)
        {
            assert_eq!((c.rank, c.positive_eigenvalues), (20, 2));
            assert!(!c.fibers_numerically_equal);
        }
    }

    #[test]
    fn survivor_has_two_sections() {
        let r = enumerate_configurations(&GramOptions::default()).unwrap();
        let s = r.results.iter().find(|c| c.survives).unwrap();
        assert_eq!(s.s_fiber_degrees, [2; 6]);
        assert!(s.fibers_numerically_equal);
        assert_eq!((s.positive_eigenvalues, s.negative_eigenvalues), (1, 18));
    }

    #[test]
    fn variants() {
        let v = variant_searches().unwrap();
        assert!(v[1].matches_expected());
        // S² = −2 leaves nothing: every Gram has rank ≥ 23
        assert!(v[2].survivors.is_empty() && v[3].survivors.is_empty());
        assert!(v[2].results.iter().all(|c| c.rank >= 23));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let r = enumerate_configurations(&GramOptions::default()).unwrap();
        let csv = r.to_csv();
        assert_eq!(csv.lines().count(), 13);
        assert!(csv.contains("2,0,1,0,0,1,1,19,19,1,18,true,true,true"));
    }

    fn feasible() -> impl Strategy<Value = CurveConfiguration> {
        prop_oneof![Just(Case::One), Just(Case::Two)].prop_flat_map(|case| {
            let t = case.triple();
            (0..=t[0], 0..=t[1], 0..=t[2]).prop_map(move |(a, b, c)| {
                CurveConfiguration::new(case, [a, b, c, t[0] - a, t[1] - b, t[2] - c]).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn gram_is_symmetric_and_sigma_invariant(cfg in feasible(), swap in any::<bool>(), s in prop_oneof![Just(-3i64), Just(-2)]) {
            let rho = if swap { RhoConvention::SheetSwapping } else { RhoConvention::SheetPreserving };
            let g = build_gram(&cfg, &GramOptions { s_self_intersection: s, rho }).unwrap();
            prop_assert!(g.is_symmetric());
            prop_assert_eq!(g.sheet_swapped(), g);
        }

        #[test]
        fn ranks_agree(cfg in feasible()) {
            let g = build_gram(&cfg, &GramOptions::default()).unwrap();
            let i = inertia(&g.rows()).unwrap();
            prop_assert_eq!(g.rank(), smith_invariants(&g.rows()).unwrap().len());
            prop_assert_eq!(g.rank(), i.positive + i.negative);
        }
    }
}
