//! Published closed forms.

use num_bigint::BigUint;
use num_traits::One;

use crate::count::ExactCount;
use crate::error::{Error, Result};
use crate::graph::{vertex_count, Family};

fn pow3(e: u32) -> BigUint {
    BigUint::from(3u32).pow(e)
}

fn require(formula: &'static str, min: u32, n: u32) -> Result<()> {
    if n < min {
        return Err(Error::OutOfRange { formula, min, n });
    }
    Ok(())
}

/// `3^(n-1)`, for `n >= 1`.
pub fn psw_alpha(n: u32) -> Result<BigUint> {
    require("web independence number", 1, n)?;
    Ok(pow3(n - 1))
}

/// `3^(n-1) - 2^(n-1) + 1`, for `n >= 2`.
pub fn psw_alpha_one_hub(n: u32) -> Result<BigUint> {
    require("web one-hub class value", 2, n)?;
    Ok(pow3(n - 1) - (BigUint::one() << (n - 1)) + 1u32)
}

/// The web has exactly one maximum independent set for `n >= 2`.
pub fn psw_mis_count(n: u32) -> Result<ExactCount> {
    require("web MIS uniqueness", 2, n)?;
    Ok(ExactCount::one())
}

/// `(3^(n-1) + 3) / 2`, for `n >= 1`.
pub fn psw_vertex_cover(n: u32) -> Result<BigUint> {
    require("web vertex cover size", 1, n)?;
    Ok((pow3(n - 1) + 3u32) / 2u32)
}

/// `(3^(n-1) + 3) / 2`, for `n >= 2`.
pub fn gasket_alpha(n: u32) -> Result<BigUint> {
    require("gasket independence number", 2, n)?;
    Ok((pow3(n - 1) + 3u32) / 2u32)
}

/// Class values `[alpha^0, alpha^1, alpha^2, alpha^3]`, for `n >= 2`.
pub fn gasket_class_values(n: u32) -> Result<[BigUint; 4]> {
    require("gasket class values", 2, n)?;
    let p = pow3(n - 1);
    let low = (&p - 1u32) / 2u32;
    let mid = (&p + 1u32) / 2u32;
    Ok([low, mid.clone(), mid, (p + 3u32) / 2u32])
}

/// `(3^(n-2) - 1) / 2`, the base-2 logarithm of the gasket MIS count.
pub fn gasket_mis_count_exponent(n: u32) -> Result<BigUint> {
    require("gasket MIS count", 2, n)?;
    Ok((pow3(n - 2) - 1u32) / 2u32)
}

pub fn gasket_mis_count(n: u32) -> Result<ExactCount> {
    gasket_mis_count_exponent(n).map(ExactCount::pow2)
}

/// `3^(n-1)`, for `n >= 2`.
pub fn gasket_vertex_cover(n: u32) -> Result<BigUint> {
    require("gasket vertex cover size", 2, n)?;
    Ok(pow3(n - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub family: Family,
    pub n: u32,
    pub num_vertices: BigUint,
    pub alpha: BigUint,
    /// Per-class values: two for the web, four for the gasket.
    pub classes: Vec<BigUint>,
    pub mis_count: ExactCount,
    pub vertex_cover: BigUint,
}

/// Every closed-form quantity of the family, for `n >= 2`.
pub fn closed_forms(family: Family, n: u32) -> Result<ClosedForms> {
    Ok(match family {
        Family::ScaleFreeWeb => {
            let alpha = psw_alpha(n)?;
            ClosedForms {
                family,
                n,
                num_vertices: vertex_count(n),
                classes: vec![alpha.clone(), psw_alpha_one_hub(n)?],
                alpha,
                mis_count: psw_mis_count(n)?,
                vertex_cover: psw_vertex_cover(n)?,
            }
        }
        Family::SierpinskiGasket => ClosedForms {
            family,
            n,
            num_vertices: vertex_count(n),
            alpha: gasket_alpha(n)?,
            classes: gasket_class_values(n)?.to_vec(),
            mis_count: gasket_mis_count(n)?,
            vertex_cover: gasket_vertex_cover(n)?,
        },
    })
}
