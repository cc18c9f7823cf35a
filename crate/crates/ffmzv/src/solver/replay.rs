//! The solver runs behind the shipped `F_<=` and `F_<` functions.
//!
//! Each run writes the target as `Z / D` with a fixed capital denominator
//! `D`, turns its recursion into an equation for `Z` and solves it.

use super::{solve_difference, DifferenceEquation, Form, Outcome};
use crate::curve::{Curve, CurveId};
use crate::error::Result;
use crate::ffunction::{builtin_ffunctions, parse_fpoly, FFunction};
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct KnownSystem {
    pub case: CurveId,
    /// Name of the solved function in the library.
    pub target: &'static str,
    pub form: Form,
    pub weight: i64,
    /// `F^(1) - (g^(1))^w F = source^(1)` for the standard form and
    /// `F^(1) = (g^(1))^w (F + source)` for the other.
    pub source: &'static str,
    pub den: &'static str,
    pub ansatz: (usize, usize),
    pub unknowns: usize,
}

pub fn known_systems() -> Vec<KnownSystem> {
    use CurveId::*;
    use Form::*;
    let s = |case, target, form, weight, source, den, ansatz: (usize, usize)| KnownSystem {
        case,
        target,
        form,
        weight,
        source,
        den,
        ansatz,
        unknowns: ansatz.0 + ansatz.1 + 2,
    };
    vec![
        s(CaseI, "F_<=34", Standard, 7, "F_34", "(X^2 + x + 1)^7", (14, 12)),
        s(CaseI, "F_<7", SumBelow, 7, "F_7", "(X^2 + x + 1)^7", (14, 12)),
        s(CaseII, "F_<=26", Standard, 8, "F_26", "(X^3 - x + 1)^8", (18, 15)),
        s(CaseIII, "F_<=3,12", Standard, 15, "F_3,12", "(X^4 + x)^15", (40, 36)),
        s(CaseIV, "F_<1", SumBelow, 1, "F_1", "(X^8 + x)(X^16 + x + 1)", (16, 10)),
        s(CaseIV, "F_<=12", Standard, 3, "F_12", "(X^8 + x)^3 (X^16 + x + 1)^3", (48, 40)),
        s(CaseIV, "F_<3", SumBelow, 3, "F_3", "(X^8 + x)^3 (X^16 + x + 1)^3", (48, 45)),
    ]
}

impl KnownSystem {
    pub fn curve(&self) -> Curve {
        Curve::builtin(self.case)
    }

    pub fn denominator(&self) -> Result<FFunction> {
        Ok(FFunction::from_fpoly(parse_fpoly(self.curve(), self.den)?))
    }

    /// The equation for `Z = D F`.
    pub fn equation(&self) -> Result<DifferenceEquation> {
        let lib = builtin_ffunctions(self.curve())?;
        let d = self.denominator()?;
        let c0 = lib.g().twist(1).pow(self.weight)?;
        let c = c0.mul(&d.twist(1)).div(&d)?;
        let src = lib.get(self.source)?;
        let r = match self.form {
            Form::Standard => d.twist(1).mul(&src.twist(1)),
            Form::SumBelow => d.mul(src),
        };
        Ok(DifferenceEquation::new(c, r, self.form, Some(self.ansatz)))
    }
}

#[derive(Clone, Debug)]
pub struct SystemRun {
    pub system: KnownSystem,
    pub unknowns: usize,
    pub equations: usize,
    pub outcome: &'static str,
    pub kernel_dim: usize,
    /// `Z / D` when the solution is unique.
    pub solution: Option<FFunction>,
    /// Whether the solution equals the shipped transcription, if any.
    pub matches_data: Option<bool>,
    /// Difference with the transcription when they disagree.
    pub diff: Option<String>,
    pub ms: u128,
}

impl SystemRun {
    pub fn passed(&self) -> bool {
        self.unknowns == self.system.unknowns && self.solution.is_some() && self.matches_data != Some(false)
    }
}

pub fn replay_system(sys: &KnownSystem) -> Result<SystemRun> {
    let start = Instant::now();
    let eq = sys.equation()?;
    let rep = solve_difference(&eq)?;
    let solution = match &rep.outcome {
        Outcome::Unique(z) => Some(z.div(&sys.denominator()?)?),
        _ => None,
    };
    let lib = builtin_ffunctions(sys.curve())?;
    let shipped = lib.display(sys.target);
    let (matches_data, diff) = match (&solution, shipped) {
        (Some(f), Some(s)) => {
            let same = f == s;
            (Some(same), (!same).then(|| f.sub(s).render()))
        }
        _ => (None, None),
    };
    Ok(SystemRun {
        system: sys.clone(),
        unknowns: rep.unknowns,
        equations: rep.equations,
        outcome: rep.outcome.label(),
        kernel_dim: rep.outcome.kernel_dim(),
        solution,
        matches_data,
        diff,
        ms: start.elapsed().as_millis(),
    })
}

/// Run every system, in parallel.
pub fn replay_known_systems() -> Result<Vec<SystemRun>> {
    use rayon::prelude::*;
    known_systems().par_iter().map(replay_system).collect()
}
