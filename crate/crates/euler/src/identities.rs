//! The named factorizations and their archimedean degree count.

use std::str::FromStr;

use archi_gamma::{GammaKind, LFactorSpec};
use serde::Serialize;

use crate::{EulerError, SatakeMultiset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Sym²Π × Sym²Π^∨ = Sym⁴Π⊗ω⁻² · Sym²Π⊗ω⁻¹ · 1.
    Sym2XSym2,
    /// Π × Π × Π = Sym²Π × Π · Π⊗ω.
    TripleProduct,
}

impl FromStr for Identity {
    type Err = EulerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sym2_x_sym2" => Ok(Identity::Sym2XSym2),
            "triple_product" => Ok(Identity::TripleProduct),
            other => Err(EulerError::UnknownIdentity(other.to_string())),
        }
    }
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Sym2XSym2 => "sym2_x_sym2",
            Identity::TripleProduct => "triple_product",
        }
    }

    /// Left side and the named factors of the right side.
    pub fn sides(self) -> (SatakeMultiset, Vec<(&'static str, SatakeMultiset)>) {
        let std = SatakeMultiset::standard();
        match self {
            Identity::Sym2XSym2 => {
                let sym2 = std.sym_power(2);
                (
                    sym2.product(&sym2.dual()),
                    vec![
                        ("Sym4 x omega^-2", std.sym_power(4).twist(-2)),
                        ("Sym2 x omega^-1", std.sym_power(2).twist(-1)),
                        ("zeta", SatakeMultiset::trivial()),
                    ],
                )
            }
            Identity::TripleProduct => (
                std.product(&std).product(&std),
                vec![("Sym2 x std", std.sym_power(2).product(&std)), ("std x omega", std.twist(1))],
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub identity: Identity,
    pub left: SatakeMultiset,
    pub right: SatakeMultiset,
    pub equal: bool,
    /// Elements only on the left, and only on the right.
    pub only_left: SatakeMultiset,
    pub only_right: SatakeMultiset,
    /// Whether the Euler polynomials ∏(1 − γT) agree coefficientwise.
    pub euler_factors_agree: bool,
}

impl FactorizationCheck {
    pub fn compare(identity: Identity, left: SatakeMultiset, factors: &[SatakeMultiset]) -> Self {
        let right = factors.iter().fold(SatakeMultiset::default(), |acc, f| acc.union(f));
        let (only_left, only_right) = left.diff(&right);
        let euler_factors_agree = left.elementary_symmetric() == right.elementary_symmetric();
        Self { identity, equal: only_left.is_empty() && only_right.is_empty(), left, right, only_left, only_right, euler_factors_agree }
    }

    pub fn diff_size(&self) -> usize {
        self.only_left.len() + self.only_right.len()
    }
}

pub fn check_factorization(name: &str) -> Result<FactorizationCheck, EulerError> {
    let identity: Identity = name.parse()?;
    let (left, factors) = identity.sides();
    let factors: Vec<SatakeMultiset> = factors.into_iter().map(|(_, f)| f).collect();
    Ok(FactorizationCheck::compare(identity, left, &factors))
}

/// Degrees (Γ_R counts 1, Γ_C counts 2) of the archimedean factors on both
/// sides of sym2_x_sym2, read off the gamma engine: the adjoint factor of a
/// weight-ℓ GL(3) representation against Sym⁴ (5), Sym² (3) and ζ (1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArchimedeanDegrees {
    pub left: u32,
    pub right: Vec<(String, u32)>,
}

impl ArchimedeanDegrees {
    pub fn balanced(&self) -> bool {
        self.left == self.right.iter().map(|(_, d)| d).sum::<u32>()
    }
}

pub fn archimedean_degrees(ell: i64) -> ArchimedeanDegrees {
    let expr = LFactorSpec::Adjoint { ell }.expr();
    let left = expr
        .factors
        .iter()
        .map(|f| {
            let d = match f.kind {
                GammaKind::R => 1,
                GammaKind::C => 2,
            };
            d * f.exponent.max(0) as u32
        })
        .sum();
    let std = SatakeMultiset::standard();
    let right = vec![
        ("Sym4".to_string(), std.sym_power(4).len() as u32),
        ("Sym2".to_string(), std.sym_power(2).len() as u32),
        ("zeta".to_string(), SatakeMultiset::trivial().len() as u32),
    ];
    ArchimedeanDegrees { left, right }
}
