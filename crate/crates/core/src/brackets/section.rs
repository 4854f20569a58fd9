use std::fmt;

use crate::superalgebra::{CoordKind, Parity, SuperPolynomial};

use super::BracketError;

/// A section `u` of E, held through its image `χ_u ∈ A¹`.
///
/// `parity` is the parity of the section itself; the image has the
/// opposite parity. Keeping it explicit lets zero sections carry a parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SectionExpr {
    value: SuperPolynomial,
    parity: Parity,
}

impl SectionExpr {
    pub fn new(value: SuperPolynomial, parity: Parity) -> Result<Self, BracketError> {
        if value.weights().iter().any(|&w| w != 1) {
            return Err(BracketError::NotWeightOne(value.to_string()));
        }
        match value.parity() {
            Some(p) if value.is_zero() || p == parity.flip() => Ok(SectionExpr { value, parity }),
            _ => Err(BracketError::ParityMismatch(value.to_string())),
        }
    }

    /// Infers the section parity from a non-zero homogeneous image.
    pub fn from_value(value: SuperPolynomial) -> Result<Self, BracketError> {
        let parity = match value.parity() {
            Some(p) if !value.is_zero() => p.flip(),
            Some(_) => Parity::Even,
            None => return Err(BracketError::ParityMismatch(value.to_string())),
        };
        SectionExpr::new(value, parity)
    }

    pub(crate) fn new_unchecked(value: SuperPolynomial, parity: Parity) -> Self {
        debug_assert!(value.weights().iter().all(|&w| w == 1));
        SectionExpr { value, parity }
    }

    pub fn zero(parity: Parity) -> Self {
        SectionExpr {
            value: SuperPolynomial::zero(),
            parity,
        }
    }

    pub fn value(&self) -> &SuperPolynomial {
        &self.value
    }

    pub fn into_value(self) -> SuperPolynomial {
        self.value
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The 1-form part (ξ-linear terms) of a section of TM ⊕ T*M.
    pub fn form_part(&self) -> SectionExpr {
        SectionExpr {
            value: self.value.drop_kinds(&[CoordKind::FiberOdd2]),
            parity: self.parity,
        }
    }

    /// The vector-field part (π-linear terms).
    pub fn field_part(&self) -> SectionExpr {
        SectionExpr {
            value: self.value.drop_kinds(&[CoordKind::FiberOdd1]),
            parity: self.parity,
        }
    }
}

/// Shows a section of TM ⊕ T*M as `X + η`, undoing χ coordinate-wise.
impl fmt::Display for SectionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field_part().value;
        let form = self.form_part().value;
        let show = |p: &SuperPolynomial, from: &str, to: &str| {
            p.to_string()
                .split(' ')
                .map(|tok| {
                    tok.split('*')
                        .map(|fac| {
                            let (sign, body) =
                                fac.strip_prefix('-').map_or(("", fac), |b| ("-", b));
                            match body.strip_prefix(from) {
                                Some(rest) if rest.chars().all(|c| c.is_ascii_digit()) => {
                                    format!("{sign}{to}{rest}")
                                }
                                _ => fac.to_string(),
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("*")
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        match (field.is_zero(), form.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", show(&field, "pi", "d/dx")),
            (true, false) => write!(f, "{}", show(&form, "xi", "dx")),
            (false, false) => write!(
                f,
                "({}) + ({})",
                show(&field, "pi", "d/dx"),
                show(&form, "xi", "dx")
            ),
        }
    }
}
