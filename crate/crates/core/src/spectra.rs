//! Closed-form spectra of strongly regular parameter sets and the bound
//! predicates evaluated on them.
//!
//! A primitive SRG has exactly three eigenvalues: `k`, `r = θ₂ > 0` and
//! `s = θₙ < 0`, with `k + r·s = μ`. They are the roots of
//! `x² − (λ − μ)x − (k − μ)`, so with `D = (λ − μ)² + 4(k − μ)`:
//!
//! ```text
//! r, s = ((λ − μ) ± √D) / 2
//! f, g = ((n − 1) ∓ (2k + (n − 1)(λ − μ)) / √D) / 2
//! ```
//!
//! All arithmetic here is exact; when `D` is not a square the eigenvalues
//! are kept symbolically in `Q(√D)`. Floating point is used only for the
//! fractional-power comparisons (`k^0.9`, `k^{6/7}`), with a relative margin
//! of [`FLOAT_MARGIN`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SrgParams;
use crate::surd::{exact_sqrt, Surd, Q};

/// Relative margin for floating-point threshold comparisons: a strict
/// inequality `x < y` is reported true only when `x < y·(1 − margin)`.
pub const FLOAT_MARGIN: f64 = 1e-12;

/// Eigenvalues and multiplicities of an SRG parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// `θ₁ = k`, multiplicity 1.
    pub k: i128,
    /// `θ₂`, multiplicity `f`.
    pub r: Surd,
    /// `θₙ`, multiplicity `g`.
    pub s: Surd,
    pub f: u64,
    pub g: u64,
    /// `(λ − μ)² + 4(k − μ)`.
    pub discriminant: i128,
}

impl Spectrum {
    /// Both restricted eigenvalues are integers.
    pub fn is_integral(&self) -> bool {
        self.r.as_integer().is_some() && self.s.as_integer().is_some()
    }
}

fn ints(p: &SrgParams) -> (i128, i128, i128, i128) {
    (p.n as i128, p.k as i128, p.lambda as i128, p.mu as i128)
}

/// Computes the spectrum of a parameter set.
pub fn srg_spectrum(p: &SrgParams) -> Result<Spectrum> {
    if !p.counting_identity() {
        return Err(Error::Infeasible(format!("{p}: k(k-λ-1) != (n-k-1)μ")));
    }
    let (n, k, l, m) = ints(p);
    let d = (l - m) * (l - m) + 4 * (k - m);
    if d <= 0 {
        return Err(Error::Infeasible(format!("{p}: discriminant {d} <= 0")));
    }
    let half = Q::new(1, 2);
    let base = Q::from_integer(l - m) * half;
    let r = Surd::new(base, half, d);
    let s = Surd::new(base, -half, d);
    let skew = 2 * k + (n - 1) * (l - m);
    let (f, g) = match exact_sqrt(d) {
        Some(root) => {
            if skew % root != 0 || ((n - 1) - skew / root) % 2 != 0 {
                return Err(Error::Infeasible(format!("{p}: non-integral multiplicities")));
            }
            ((n - 1 - skew / root) / 2, (n - 1 + skew / root) / 2)
        }
        None if skew == 0 && (n - 1) % 2 == 0 => ((n - 1) / 2, (n - 1) / 2),
        None => return Err(Error::Infeasible(format!("{p}: irrational multiplicities"))),
    };
    if f < 0 || g < 0 {
        return Err(Error::Infeasible(format!("{p}: negative multiplicity")));
    }
    Ok(Spectrum {
        k,
        r,
        s,
        f: f as u64,
        g: g as u64,
        discriminant: d,
    })
}

/// Parameters of the complement: `(n, n−k−1, n−2k+μ−2, n−2k+λ)`.
///
/// The result may fall outside `0 < k < n − 1` (an imprimitive or degenerate
/// input); check [`SrgParams::in_range`]. Only entries that would be
/// negative are rejected.
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    let (n, k, l, m) = ints(p);
    let out = [n, n - k - 1, n - 2 * k + m - 2, n - 2 * k + l];
    if out.iter().any(|&x| x < 0) {
        return Err(Error::Infeasible(format!("{p}: complement has a negative parameter")));
    }
    Ok(SrgParams::new(
        out[0] as u64,
        out[1] as u64,
        out[2] as u64,
        out[3] as u64,
    ))
}

/// Outcome of [`feasibility_check`], one verdict per condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub degree_range: bool,
    pub counting_identity: bool,
    pub integral_multiplicities: bool,
    /// `k + r·s = μ`; false when the spectrum is undefined.
    pub eigen_identity: bool,
}

impl Feasibility {
    pub fn all(&self) -> bool {
        self.degree_range && self.counting_identity && self.integral_multiplicities && self.eigen_identity
    }
}

pub fn feasibility_check(p: &SrgParams) -> Feasibility {
    let spec = srg_spectrum(p).ok();
    Feasibility {
        degree_range: p.in_range(),
        counting_identity: p.counting_identity(),
        integral_multiplicities: spec.is_some(),
        eigen_identity: spec.is_some_and(|sp| (Surd::int(sp.k) + sp.r * sp.s) == Surd::int(p.mu as i128)),
    }
}

/// `T(m)`: `(m(m−1)/2, 2(m−2), m−2, 4)`.
pub fn triangular_params(m: u64) -> Result<SrgParams> {
    if m < 4 {
        return Err(Error::ParameterRange(format!("triangular order {m} < 4")));
    }
    Ok(SrgParams::new(m * (m - 1) / 2, 2 * (m - 2), m - 2, 4))
}

/// Latin square graph of `t` MOLS of order `m`:
/// `(m², (t+2)(m−1), m−2+t(t+1), (t+1)(t+2))`.
pub fn latin_square_params(m: u64, t: u64) -> Result<SrgParams> {
    if m < 2 || t + 1 > m {
        return Err(Error::ParameterRange(format!(
            "need m >= 2 and t <= m - 1, got m={m}, t={t}"
        )));
    }
    if t + 1 == m {
        return Err(Error::CompleteGraph(m * m));
    }
    Ok(SrgParams::new(
        m * m,
        (t + 2) * (m - 1),
        m - 2 + t * (t + 1),
        (t + 1) * (t + 2),
    ))
}

/// Block graph of a 2-`(m, ℓ, 1)` design:
/// `(m(m−1)/ℓ(ℓ−1), ℓ(m−ℓ)/(ℓ−1), (ℓ−1)² + (m−2ℓ+1)/(ℓ−1), ℓ²)`.
pub fn block_graph_params(m: u64, ell: u64) -> Result<SrgParams> {
    if ell < 2 {
        return Err(Error::ParameterRange(format!("block size {ell} < 2")));
    }
    let plane = ell * ell - ell + 1;
    if m == plane {
        return Err(Error::CompleteGraph(m));
    }
    if m < plane {
        return Err(Error::Infeasible(format!(
            "2-({m},{ell},1): fewer points than a projective plane"
        )));
    }
    let div = |a: u64, b: u64| -> Result<u64> {
        if a.is_multiple_of(b) {
            Ok(a / b)
        } else {
            Err(Error::Infeasible(format!("2-({m},{ell},1): {a}/{b} not integral")))
        }
    };
    Ok(SrgParams::new(
        div(m * (m - 1), ell * (ell - 1))?,
        div(ell * (m - ell), ell - 1)?,
        (ell - 1) * (ell - 1) + div(m - 2 * ell + 1, ell - 1)?,
        ell * ell,
    ))
}

/// Hoffman's coclique bound `n·s/(s − k)`.
pub fn hoffman_coclique_bound(p: &SrgParams) -> Result<Surd> {
    let sp = srg_spectrum(p)?;
    let n = Surd::int(p.n as i128);
    Ok(n * sp.s * (sp.s - Surd::int(sp.k)).recip())
}

/// Lower bound `⌊(k − θ₂ + 1)/2⌋` on the number of edge-disjoint perfect
/// matchings in a regular graph of even order.
pub fn bh_matching_bound(p: &SrgParams) -> Result<i128> {
    let sp = srg_spectrum(p)?;
    let x = (Surd::int(sp.k + 1) - sp.r) * Surd::rational(Q::new(1, 2));
    Ok(x.floor())
}

/// Neumaier's claw bound `θ₂ ≤ θₙ(θₙ + 1)(μ + 1)/2 − 1`, evaluated literally.
pub fn claw_bound_holds(p: &SrgParams) -> Result<bool> {
    let sp = srg_spectrum(p)?;
    let rhs = sp.s * (sp.s + Surd::int(1)) * Surd::int(p.mu as i128 + 1) * Surd::rational(Q::new(1, 2)) - Surd::int(1);
    Ok(sp.r <= rhs)
}

/// Neumaier's μ-bound `μ ≤ θₙ³(2θₙ + 3)`.
pub fn mu_bound_holds(p: &SrgParams) -> Result<bool> {
    let sp = srg_spectrum(p)?;
    let rhs = sp.s * sp.s * sp.s * (Surd::int(2) * sp.s + Surd::int(3));
    Ok(Surd::int(p.mu as i128) <= rhs)
}

fn strictly_below(x: f64, y: f64) -> bool {
    x < y * (1.0 - FLOAT_MARGIN)
}

/// `max{θ₂, −θₙ} < k^0.9`. Informational only: the class-1 conclusion it
/// feeds into holds only beyond unknown constants.
pub fn ferber_jain_holds(p: &SrgParams) -> Result<bool> {
    if p.n % 2 == 1 {
        return Err(Error::NotApplicable(format!("{p}: odd order")));
    }
    let sp = srg_spectrum(p)?;
    let lhs = sp.r.max(-sp.s).to_f64();
    Ok(strictly_below(lhs, (p.k as f64).powf(0.9)))
}

/// The two sufficient degree thresholds for 1-factorability of regular
/// graphs of even order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HighDegree {
    /// `k ≥ 2⌈n/4⌉ − 1` (large `n` only).
    pub csaba: bool,
    /// `k ≥ 0.823·n`.
    pub cariolaro_hilton: bool,
}

pub fn high_degree_threshold(n: u64, k: u64) -> HighDegree {
    HighDegree {
        csaba: k + 1 >= 2 * n.div_ceil(4),
        // 0.823 = 823/1000, compared exactly.
        cariolaro_hilton: 1000 * k >= 823 * n,
    }
}

/// Complement of a 2-`(m, ℓ, 1)` block graph is class 1 when `6ℓ² ≤ m`
/// (and the order is even).
pub fn prop32_holds(m: u64, ell: u64) -> bool {
    6 * ell * ell <= m
}

/// Every predicate for one parameter set. Nothing here gates the coloring
/// pipeline; it is reported for inspection.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub params: SrgParams,
    pub feasibility: Feasibility,
    pub spectrum: Option<Spectrum>,
    pub complement: Option<SrgParams>,
    pub hoffman_coclique: Option<Surd>,
    pub bh_matchings: Option<i128>,
    pub claw: Option<bool>,
    pub mu_bound: Option<bool>,
    /// `None` when not applicable (odd order) or the spectrum is undefined.
    pub ferber_jain: Option<bool>,
    /// `θ₂ < k^{6/7}`.
    pub theta2_below_k67: Option<bool>,
    /// `−θₙ < (2k)^{6/7}`.
    pub neg_thetan_below_2k67: Option<bool>,
    pub high_degree: HighDegree,
}

impl BoundReport {
    pub fn new(p: SrgParams) -> BoundReport {
        let spectrum = srg_spectrum(&p).ok();
        let k = p.k as f64;
        BoundReport {
            params: p,
            feasibility: feasibility_check(&p),
            spectrum,
            complement: complement_params(&p).ok(),
            hoffman_coclique: hoffman_coclique_bound(&p).ok(),
            bh_matchings: bh_matching_bound(&p).ok(),
            claw: claw_bound_holds(&p).ok(),
            mu_bound: mu_bound_holds(&p).ok(),
            ferber_jain: ferber_jain_holds(&p).ok(),
            theta2_below_k67: spectrum.map(|sp| strictly_below(sp.r.to_f64(), k.powf(6.0 / 7.0))),
            neg_thetan_below_2k67: spectrum.map(|sp| strictly_below((-sp.s).to_f64(), (2.0 * k).powf(6.0 / 7.0))),
            high_degree: high_degree_threshold(p.n, p.k),
        }
    }

    /// `key: value` lines in a fixed order.
    pub fn to_text(&self) -> String {
        fn opt<T: ToString>(x: &Option<T>) -> String {
            x.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
        }
        let p = &self.params;
        let mut s = String::new();
        let _ = writeln!(s, "params: {},{},{},{}", p.n, p.k, p.lambda, p.mu);
        let fe = &self.feasibility;
        let _ = writeln!(s, "degree_range: {}", fe.degree_range);
        let _ = writeln!(s, "counting_identity: {}", fe.counting_identity);
        let _ = writeln!(s, "integral_multiplicities: {}", fe.integral_multiplicities);
        let _ = writeln!(s, "eigen_identity: {}", fe.eigen_identity);
        match &self.spectrum {
            Some(sp) => {
                let _ = writeln!(s, "theta1: {}", sp.k);
                let _ = writeln!(s, "theta2: {}", sp.r);
                let _ = writeln!(s, "theta2_multiplicity: {}", sp.f);
                let _ = writeln!(s, "thetan: {}", sp.s);
                let _ = writeln!(s, "thetan_multiplicity: {}", sp.g);
                let _ = writeln!(s, "discriminant: {}", sp.discriminant);
            }
            None => {
                for key in [
                    "theta1",
                    "theta2",
                    "theta2_multiplicity",
                    "thetan",
                    "thetan_multiplicity",
                    "discriminant",
                ] {
                    let _ = writeln!(s, "{key}: n/a");
                }
            }
        }
        let comp = self
            .complement
            .map(|c| format!("{},{},{},{}", c.n, c.k, c.lambda, c.mu));
        let _ = writeln!(s, "complement: {}", opt(&comp));
        let _ = writeln!(s, "hoffman_coclique_bound: {}", opt(&self.hoffman_coclique));
        let _ = writeln!(s, "bh_disjoint_perfect_matchings: {}", opt(&self.bh_matchings));
        let _ = writeln!(s, "claw_bound: {}", opt(&self.claw));
        let _ = writeln!(s, "mu_bound: {}", opt(&self.mu_bound));
        let _ = writeln!(s, "ferber_jain: {}", opt(&self.ferber_jain));
        let _ = writeln!(s, "theta2_below_k^(6/7): {}", opt(&self.theta2_below_k67));
        let _ = writeln!(s, "neg_thetan_below_(2k)^(6/7): {}", opt(&self.neg_thetan_below_2k67));
        let _ = writeln!(s, "csaba_threshold: {}", self.high_degree.csaba);
        let _ = writeln!(s, "cariolaro_hilton_threshold: {}", self.high_degree.cariolaro_hilton);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: u64, k: u64, l: u64, m: u64) -> Spectrum {
        srg_spectrum(&SrgParams::new(n, k, l, m)).unwrap()
    }

    fn ints(s: &Spectrum) -> (i128, i128, u64, u64) {
        (s.r.as_integer().unwrap(), s.s.as_integer().unwrap(), s.f, s.g)
    }

    #[test]
    fn spectra_of_small_sets() {
        assert_eq!(ints(&sp(10, 3, 0, 1)), (1, -2, 5, 4));
        assert_eq!(ints(&sp(26, 10, 3, 4)), (2, -3, 13, 12));
        assert_eq!(ints(&sp(16, 6, 2, 2)), (2, -2, 6, 9));
    }

    #[test]
    fn conference_spectrum_is_symbolic() {
        // Paley(13): (13,6,2,3), eigenvalues (-1 ± √13)/2, multiplicities 6, 6.
        let s = sp(13, 6, 2, 3);
        assert!(!s.is_integral());
        assert_eq!((s.f, s.g), (6, 6));
        assert_eq!(s.r.to_string(), "(-1+√13)/2");
        assert_eq!((Surd::int(s.k) + s.r * s.s).as_integer(), Some(3));
        // C5 = Paley(5).
        let c5 = sp(5, 2, 0, 1);
        assert_eq!((c5.f, c5.g), (2, 2));
    }

    #[test]
    fn infeasible_sets() {
        assert!(matches!(
            srg_spectrum(&SrgParams::new(10, 3, 1, 1)),
            Err(Error::Infeasible(_))
        ));
        // Counting identity holds but multiplicities are irrational.
        let p = SrgParams::new(16, 5, 2, 1);
        assert!(p.counting_identity());
        assert!(matches!(srg_spectrum(&p), Err(Error::Infeasible(_))));
    }

    #[test]
    fn complement_formula() {
        let c = |n, k, l, m| complement_params(&SrgParams::new(n, k, l, m)).unwrap();
        assert_eq!(c(10, 6, 3, 4), SrgParams::new(10, 3, 0, 1));
        assert_eq!(c(16, 6, 2, 2), SrgParams::new(16, 9, 4, 6));
        let g = SrgParams::new(56, 10, 0, 2);
        assert_eq!(complement_params(&complement_params(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn feasibility_reports() {
        assert!(feasibility_check(&SrgParams::new(10, 3, 0, 1)).all());
        let bad = feasibility_check(&SrgParams::new(10, 3, 1, 1));
        assert!(!bad.counting_identity);
        assert!(bad.degree_range);
        assert!(feasibility_check(&SrgParams::new(16, 5, 0, 2)).all());
    }

    #[test]
    fn family_params() {
        assert_eq!(triangular_params(8).unwrap(), SrgParams::new(28, 12, 6, 4));
        assert_eq!(latin_square_params(6, 0).unwrap(), SrgParams::new(36, 10, 4, 2));
        assert_eq!(block_graph_params(15, 3).unwrap(), SrgParams::new(35, 18, 9, 9));
        assert_eq!(block_graph_params(7, 3), Err(Error::CompleteGraph(7)));
        assert!(matches!(block_graph_params(10, 3), Err(Error::Infeasible(_))));
        assert_eq!(latin_square_params(4, 3), Err(Error::CompleteGraph(16)));
        // 2-(m,2,1) block graph is T(m).
        assert_eq!(block_graph_params(9, 2).unwrap(), triangular_params(9).unwrap());
    }

    #[test]
    fn hoffman_bounds() {
        let h = |n, k, l, m| hoffman_coclique_bound(&SrgParams::new(n, k, l, m)).unwrap();
        assert_eq!(h(16, 6, 2, 2).as_integer(), Some(4));
        assert_eq!(h(10, 3, 0, 1).as_integer(), Some(4));
        for m in 2..=12u64 {
            for t in 0..=m.saturating_sub(3) {
                let p = latin_square_params(m, t).unwrap();
                assert_eq!(hoffman_coclique_bound(&p).unwrap().as_integer(), Some(m as i128));
            }
        }
    }

    #[test]
    fn matching_bounds() {
        let b = |n, k, l, m| bh_matching_bound(&SrgParams::new(n, k, l, m)).unwrap();
        assert_eq!(b(10, 3, 0, 1), 1);
        assert_eq!(b(16, 6, 2, 2), 2);
        assert_eq!(b(56, 10, 0, 2), 4);
    }

    #[test]
    fn neumaier_bounds() {
        let pet = SrgParams::new(10, 3, 0, 1);
        assert!(claw_bound_holds(&pet).unwrap());
        assert!(mu_bound_holds(&pet).unwrap());
        assert!(claw_bound_holds(&SrgParams::new(64, 18, 2, 6)).unwrap());
        // T(9) is a block graph; claw bound fails: 5 <= (-2)(-1)(5)/2 - 1 = 4 is false.
        assert!(!claw_bound_holds(&SrgParams::new(36, 14, 7, 4)).unwrap());
    }

    #[test]
    fn ferber_jain() {
        assert!(ferber_jain_holds(&SrgParams::new(100, 18, 8, 2)).unwrap());
        assert!(ferber_jain_holds(&SrgParams::new(10, 3, 0, 1)).unwrap());
        assert!(matches!(
            ferber_jain_holds(&SrgParams::new(9, 4, 1, 2)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn degree_thresholds() {
        assert_eq!(
            high_degree_threshold(16, 9),
            HighDegree {
                csaba: true,
                cariolaro_hilton: false
            }
        );
        assert_eq!(
            high_degree_threshold(10, 9),
            HighDegree {
                csaba: true,
                cariolaro_hilton: true
            }
        );
        assert_eq!(
            high_degree_threshold(100, 49),
            HighDegree {
                csaba: true,
                cariolaro_hilton: false
            }
        );
        assert!(!high_degree_threshold(100, 48).csaba);
    }

    #[test]
    fn prop32() {
        assert!(prop32_holds(24, 2));
        assert!(!prop32_holds(23, 2));
        assert!(prop32_holds(54, 3));
    }

    #[test]
    fn report_text_is_stable() {
        let txt = BoundReport::new(SrgParams::new(10, 3, 0, 1)).to_text();
        assert!(txt.starts_with("params: 10,3,0,1\n"));
        assert!(txt.contains("theta2: 1\n"));
        assert!(txt.contains("thetan: -2\n"));
        assert!(txt.contains("bh_disjoint_perfect_matchings: 1\n"));
        assert!(txt.contains("ferber_jain: true\n"));
        let odd = BoundReport::new(SrgParams::new(9, 4, 1, 2)).to_text();
        assert!(odd.contains("ferber_jain: n/a\n"));
    }
}
