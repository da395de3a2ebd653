use super::Factored;
use crate::error::{invalid, Result};

fn check_squarefree(name: &str, n: &Factored) -> Result<()> {
    if n.is_squarefree() {
        Ok(())
    } else {
        invalid(format!("{name} = {n} is not square-free"))
    }
}

/// `<h, i> = (-1)^{#(P(h) ∩ P(i))}` for square-free `h`, `i`.
pub fn sign_pair(h: &Factored, i: &Factored) -> Result<i32> {
    check_squarefree("h", h)?;
    check_squarefree("i", i)?;
    let shared = h.primes().filter(|&p| i.valuation(p) > 0).count();
    Ok(if shared % 2 == 0 { 1 } else { -1 })
}

/// The group law on square-free divisors: the product of the primes in the
/// symmetric difference of `P(h)` and `P(h2)`.
pub fn xor_divisor(h: &Factored, h2: &Factored) -> Result<Factored> {
    check_squarefree("h", h)?;
    check_squarefree("h'", h2)?;
    let left = h.exclusive_quotient(h2);
    let right = h2.exclusive_quotient(h);
    left.mul(&right)
}
