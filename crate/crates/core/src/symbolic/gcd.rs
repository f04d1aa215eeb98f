//! Multivariate polynomial gcd over `Q`.
//!
//! The fast path is the heuristic integer gcd: evaluate one variable at a
//! large integer, recurse, rebuild the candidate from its balanced base-`ξ`
//! digits and confirm it by exact division. When that fails repeatedly the
//! fallback is recursive content extraction plus a primitive pseudo-remainder
//! sequence. Results are monic under the graded-lex order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Polynomial, Rational};

pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    if a == b {
        return a.monic();
    }
    if let Some(g) = heuristic_gcd(&integer_primitive(a), &integer_primitive(b)) {
        return g.monic();
    }
    gcd_by_prs(a, b)
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content(p: &Polynomial, var: usize) -> Polynomial {
    content_with(p, var, gcd)
}

fn content_with(
    p: &Polynomial,
    var: usize,
    gcd: fn(&Polynomial, &Polynomial) -> Polynomial,
) -> Polynomial {
    let mut acc: Option<Polynomial> = None;
    for coeff in p.coefficients_in(var).into_values() {
        let next = match acc {
            None => coeff.monic(),
            Some(g) => gcd(&g, &coeff),
        };
        if next.is_constant() {
            return Polynomial::one(p.vars());
        }
        acc = Some(next);
    }
    acc.unwrap_or_else(|| Polynomial::zero(p.vars()))
}

fn gcd_by_prs(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.vars());
    }
    let nvars = a.vars().len();
    let var = (0..nvars)
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("non-constant polynomial has a variable");

    // A common divisor cannot involve `var` when one side is free of it.
    if a.degree_in(var) == 0 {
        return gcd_by_prs(a, &content_with(b, var, gcd_by_prs));
    }
    if b.degree_in(var) == 0 {
        return gcd_by_prs(&content_with(a, var, gcd_by_prs), b);
    }

    let ca = content_with(a, var, gcd_by_prs);
    let cb = content_with(b, var, gcd_by_prs);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_by_prs(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).monic()
}

fn primitive_part(p: &Polynomial, var: usize) -> Polynomial {
    let c = content_with(p, var, gcd_by_prs);
    p.div_exact(&c).expect("content divides").monic()
}

fn leading_coefficient_in(p: &Polynomial, var: usize) -> (u32, Polynomial) {
    p.coefficients_in(var)
        .into_iter()
        .next_back()
        .expect("nonzero polynomial")
}

/// Pseudo-remainder of `a` by `b` with respect to `var`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let (db, lb) = leading_coefficient_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(var);
        if dr < db {
            break;
        }
        let (_, lr) = leading_coefficient_in(&r, var);
        let t = lr.shift(var, dr - db);
        r = &(&r * &lb) - &(&t * b);
    }
    r
}

/// gcd of two polynomials that are primitive with respect to `var`.
fn primitive_prs(a: Polynomial, b: Polynomial, var: usize) -> Polynomial {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part(&b, var);
        }
        if r.degree_in(var) == 0 {
            return Polynomial::constant(a.vars(), Rational::one());
        }
        a = b;
        b = primitive_part(&r, var);
    }
}

fn numerators(p: &Polynomial) -> impl Iterator<Item = &BigInt> {
    p.terms().map(|(_, c)| c.numer())
}

/// gcd of the coefficients of a polynomial with integer coefficients.
fn integer_content(p: &Polynomial) -> BigInt {
    numerators(p).fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn max_norm(p: &Polynomial) -> BigInt {
    numerators(p).map(|c| c.abs()).max().unwrap_or_default()
}

/// Scales `p` to integer coefficients with content 1 and a positive leading
/// coefficient.
fn integer_primitive(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let lcm = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let q = p.scale(&Rational::from_integer(lcm));
    let mut content = integer_content(&q);
    if q.leading_coefficient().is_negative() {
        content = -content;
    }
    q.scale(&Rational::new(BigInt::one(), content))
}

/// `p` with `var` replaced by an integer.
fn substitute(p: &Polynomial, var: usize, value: &BigInt) -> Polynomial {
    let value = Rational::from_integer(value.clone());
    let mut acc = Polynomial::zero(p.vars());
    for (deg, coeff) in p.coefficients_in(var) {
        acc = &acc + &coeff.scale(&num_traits::pow(value.clone(), deg as usize));
    }
    acc
}

fn balanced_mod(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Rebuilds a polynomial in `var` from its image at `var = ξ` using balanced
/// base-`ξ` digits of every coefficient.
fn interpolate(image: &Polynomial, var: usize, xi: &BigInt) -> Polynomial {
    let vars = image.vars().clone();
    let mut rest = image.clone();
    let mut out = Polynomial::zero(&vars);
    let inv = Rational::new(BigInt::one(), xi.clone());
    let mut k = 0;
    while !rest.is_zero() {
        let digit = Polynomial::from_terms(
            &vars,
            rest.terms().map(|(m, c)| {
                (
                    m.clone(),
                    Rational::from_integer(balanced_mod(c.numer(), xi)),
                )
            }),
        );
        out = &out + &digit.shift(var, k);
        rest = (&rest - &digit).scale(&inv);
        k += 1;
    }
    out
}

const HEURISTIC_ATTEMPTS: usize = 6;
const MAX_IMAGE_BITS: u64 = 20_000;

/// gcd over `Z` of two nonzero polynomials with integer coefficients, with a
/// positive leading coefficient. `None` when the heuristic gives up.
fn heuristic_gcd(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let vars = a.vars().clone();
    let ca = integer_content(a);
    let cb = integer_content(b);
    let c = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Some(Polynomial::constant(&vars, Rational::from_integer(c)));
    }
    let a = a.scale(&Rational::new(BigInt::one(), ca));
    let b = b.scale(&Rational::new(BigInt::one(), cb));
    let scale_back = |g: Polynomial| {
        let g = integer_primitive(&g);
        g.scale(&Rational::from_integer(c.clone()))
    };
    let nvars = vars.len();
    // A variable present on one side only cannot occur in the gcd.
    for v in 0..nvars {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da > 0 && db == 0 {
            let cont = coefficient_gcd(&a, v)?;
            return heuristic_gcd(&cont, &b).map(scale_back);
        }
        if db > 0 && da == 0 {
            let cont = coefficient_gcd(&b, v)?;
            return heuristic_gcd(&a, &cont).map(scale_back);
        }
    }
    let var = (0..nvars).find(|&v| a.degree_in(v) > 0)?;
    let degree = u64::from(a.degree_in(var).max(b.degree_in(var)));
    let mut xi: BigInt = max_norm(&a).min(max_norm(&b)) * 2 + 29;
    for _ in 0..HEURISTIC_ATTEMPTS {
        if xi.bits() * degree > MAX_IMAGE_BITS {
            return None;
        }
        let ea = substitute(&a, var, &xi);
        let eb = substitute(&b, var, &xi);
        if !ea.is_zero() && !eb.is_zero() {
            let image = heuristic_gcd(&ea, &eb)?;
            let candidate = integer_primitive(&interpolate(&image, var, &xi));
            if !candidate.is_zero()
                && a.div_exact(&candidate).is_some()
                && b.div_exact(&candidate).is_some()
            {
                return Some(candidate.scale(&Rational::from_integer(c)));
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Integer gcd of the coefficients of `p` in `var`.
fn coefficient_gcd(p: &Polynomial, var: usize) -> Option<Polynomial> {
    let mut acc: Option<Polynomial> = None;
    for coeff in p.coefficients_in(var).into_values() {
        acc = Some(match acc {
            None => integer_primitive(&coeff),
            Some(g) => heuristic_gcd(&g, &coeff)?,
        });
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::poly::{rat, VarSet};

    fn setup() -> (VarSet, Polynomial, Polynomial, Polynomial) {
        let v = VarSet::new(["x", "y", "z"]).unwrap();
        let x = Polynomial::var(&v, 0);
        let y = Polynomial::var(&v, 1);
        let z = Polynomial::var(&v, 2);
        (v, x, y, z)
    }

    #[test]
    fn univariate() {
        let (v, _, y, _) = setup();
        let one = Polynomial::one(&v);
        let a = &y.pow(2) - &one;
        let b = &y - &one;
        assert_eq!(gcd(&a, &b), b);
        assert_eq!(gcd(&a, &(&y + &y)), one);
    }

    #[test]
    fn multivariate_common_factor() {
        let (v, x, y, z) = setup();
        let one = Polynomial::one(&v);
        let f = &(&(&x * &y) + &z) + &one;
        let a = &f * &(&x - &z.pow(2));
        let b = &f * &(&(&y * &y) + &x.scale(&rat(3, 2)));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn content_across_variables() {
        let (_, x, y, z) = setup();
        // (y+z)*x^2 + (y+z)*(y-z)*x
        let s = &y + &z;
        let p = &(&s * &x.pow(2)) + &(&(&s * &(&y - &z)) * &x);
        let q = &s.pow(2) * &(&x - &z);
        assert_eq!(gcd(&p, &q), s.monic());
        assert_eq!(content(&p, 0), s.monic());
    }

    #[test]
    fn heuristic_agrees_with_remainder_sequences() {
        let (v, x, y, z) = setup();
        let one = Polynomial::one(&v);
        let polys = [
            &(&x.pow(3) * &y) - &z.scale(&rat(7, 2)),
            &(&x * &z) + &y.pow(2),
            &(&y - &z).pow(2) + &one,
            &(&x.pow(2) - &one) * &(&y + &z.scale(&rat(-3, 1))),
            (&(&x * &y) * &z).scale(&rat(5, 1)),
        ];
        for (i, a) in polys.iter().enumerate() {
            for (j, b) in polys.iter().enumerate() {
                for c in &polys {
                    let pa = a * c;
                    let pb = &(b * c) * &polys[(i + j) % polys.len()];
                    let fast = gcd(&pa, &pb);
                    assert_eq!(fast, gcd_by_prs(&pa, &pb), "{pa} | {pb}");
                    assert!(pa.div_exact(&fast).is_some() && pb.div_exact(&fast).is_some());
                }
            }
        }
    }

    #[test]
    fn rational_scalars_do_not_matter() {
        let (_, x, y, _) = setup();
        let a = (&x + &y).scale(&rat(7, 3));
        let b = (&(&x + &y) * &x).scale(&rat(-2, 5));
        assert_eq!(gcd(&a, &b), &x + &y);
    }
}
