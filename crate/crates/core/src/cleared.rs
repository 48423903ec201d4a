//! Denominator-cleared evaluation of multilinear polynomials in projective
//! ratios.
//!
//! A polynomial over variables `x_0 .. x_{k-1}` is a list of
//! `(coefficient, mask)` terms, where bit `i` of `mask` selects `x_i`.
//! Clearing multiplies every term by `q_0 ⋯ q_{k-1}`, so a term becomes
//! `coefficient · Π_{i ∈ mask} p_i · Π_{i ∉ mask} q_i`. The result is
//! homogeneous of degree one in each `(p_i, q_i)` and is defined for
//! infinite ratios.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::number::ProjRatio;

pub(crate) type Term = (i64, u8);

pub(crate) fn eval(vars: &[&ProjRatio], terms: &[Term]) -> BigInt {
    terms.iter().fold(BigInt::zero(), |acc, &(coeff, mask)| {
        let product = vars
            .iter()
            .enumerate()
            .fold(BigInt::from(coeff), |prod, (i, r)| {
                if mask & (1 << i) != 0 {
                    prod * r.p()
                } else {
                    prod * r.q()
                }
            });
        acc + product
    })
}
