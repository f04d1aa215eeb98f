//! Canonical rational functions and evaluation points.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::gcd::gcd;
use super::poly::{Polynomial, Rational, VarSet};
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form.
///
/// Numerator and denominator are coprime, the denominator's graded-lex
/// leading coefficient is `1`, and zero is `0/1`. Canonical forms are unique,
/// so the derived equality is equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::ChartMismatch(
                "numerator and denominator over different variables".into(),
            ));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            let one = Polynomial::one(num.vars());
            return RationalFunction { num, den: one };
        }
        if let Some(c) = den.constant_value() {
            let one = Polynomial::one(num.vars());
            return RationalFunction {
                num: num.scale(&c.recip()),
                den: one,
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_sign(num, den)
    }

    fn normalize_sign(num: Polynomial, den: Polynomial) -> Self {
        let lc = den.leading_coefficient();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Polynomial::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_polynomial(Polynomial::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_polynomial(Polynomial::one(vars))
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(vars, c))
    }

    pub fn from_int(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(c.into()))
    }

    pub fn var(vars: &VarSet, index: usize) -> Self {
        Self::from_polynomial(Polynomial::var(vars, index))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_constant() && self.num.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars() == other.vars() {
            Ok(())
        } else {
            Err(Error::ChartMismatch(format!(
                "{:?} vs {:?}",
                self.vars().names(),
                other.vars().names()
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.add_unchecked(&-other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let inv = other.recip()?;
        Ok(self.mul_unchecked(&inv))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_sign(self.den.clone(), self.num.clone()))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            if self.den.is_constant() {
                return RationalFunction {
                    num,
                    den: self.den.clone(),
                };
            }
            return Self::canonical(num, self.den.clone());
        }
        // With d1 = g·e1 and d2 = g·e2, any factor shared by the new
        // numerator and e1·e2·g already divides g.
        let g = gcd(&self.den, &other.den);
        let e1 = self.den.div_exact(&g).expect("gcd divides");
        let e2 = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &e2) + &(&other.num * &e1);
        if num.is_zero() {
            return Self::zero(self.vars());
        }
        let den = &self.den * &e2;
        if g.is_constant() {
            return Self::normalize_sign(num, den);
        }
        let h = gcd(&num, &g);
        if h.is_constant() {
            return Self::normalize_sign(num, den);
        }
        Self::normalize_sign(
            num.div_exact(&h).expect("gcd divides"),
            den.div_exact(&h).expect("gcd divides"),
        )
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars());
        }
        if self.den.is_constant() && other.den.is_constant() {
            return Self::from_polynomial(&self.num * &other.num);
        }
        // Inputs are reduced, so cross-cancelling leaves a reduced product.
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Self::normalize_sign(&n1 * &n2, &d1 * &d2)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Partial derivative with respect to the variable at `var`.
    pub fn partial(&self, var: usize) -> Self {
        if self.den.is_constant() {
            return Self::from_polynomial(self.num.partial(var));
        }
        let dn = self.num.partial(var);
        let dd = self.den.partial(var);
        if dd.is_zero() {
            return Self::canonical(dn, self.den.clone());
        }
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::canonical(num, self.den.pow(2))
    }

    /// Partial derivative with respect to the named coordinate.
    pub fn partial_by_name(&self, var: &str) -> Result<Self> {
        let idx = self
            .vars()
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.partial(idx))
    }

    pub fn eval(&self, p: &Point) -> Result<Rational> {
        if p.vars() != self.vars() {
            return Err(Error::ChartMismatch("point over a different chart".into()));
        }
        let d = self.den.eval(p.values());
        if d.is_zero() {
            return Err(Error::PoleAtPoint(self.den.to_string()));
        }
        Ok(self.num.eval(p.values()) / d)
    }

    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        self.num.eval_f64(values) / self.den.eval_f64(values)
    }

    /// Exact equality as functions; errors when the operands live on
    /// different charts.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.try_sub(other)?.is_zero())
    }

    /// Re-canonicalizes. Values are always canonical, so this is the identity
    /// on well-formed inputs.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn to_f64_constant(&self) -> Option<f64> {
        self.constant_value().and_then(|c| c.to_f64())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_add(rhs)
            .expect("rational functions over different charts")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_sub(rhs)
            .expect("rational functions over different charts")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_mul(rhs)
            .expect("rational functions over different charts")
    }
}

/// Panics on division by the zero function; use [`RationalFunction::try_div`]
/// to handle that case.
impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs)
            .expect("rational function division failed")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() == 1 && self.num.leading_coefficient().is_one() {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Assignment of a rational value to every variable of a chart.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    vars: VarSet,
    values: Vec<Rational>,
}

impl Point {
    pub fn new(vars: &VarSet, values: Vec<Rational>) -> Result<Self> {
        if values.len() != vars.len() {
            return Err(Error::InvalidPoint(format!(
                "expected {} values, got {}",
                vars.len(),
                values.len()
            )));
        }
        Ok(Point {
            vars: vars.clone(),
            values,
        })
    }

    pub fn from_map(vars: &VarSet, map: &BTreeMap<String, Rational>) -> Result<Self> {
        for key in map.keys() {
            if vars.index_of(key).is_none() {
                return Err(Error::InvalidPoint(format!("`{key}` is not a coordinate")));
            }
        }
        let values = vars
            .names()
            .iter()
            .map(|n| {
                map.get(n)
                    .cloned()
                    .ok_or_else(|| Error::InvalidPoint(format!("coordinate `{n}` unassigned")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Point {
            vars: vars.clone(),
            values,
        })
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::poly::rat;

    fn xyz() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    fn c(v: &VarSet, n: i64, d: i64) -> RationalFunction {
        RationalFunction::constant(v, rat(n, d))
    }

    #[test]
    fn arithmetic_examples() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        assert!((&y - &y).is_zero());

        // g_xx of the R^3 example at eps = 1, minus the flat part
        let gxx = &(&y.pow(2) * &c(&v, 1, 4)) + &c(&v, 1, 4);
        assert_eq!(&gxx - &c(&v, 1, 4), &y.pow(2) * &c(&v, 1, 4));

        let inv_y = y.recip().unwrap();
        assert!((&inv_y * &y).is_one());
    }

    #[test]
    fn division_by_zero() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        assert_eq!(
            y.try_div(&RationalFunction::zero(&v)),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::new(Polynomial::one(&v), Polynomial::zero(&v)).is_err());
    }

    #[test]
    fn partial_examples() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        let f = &(&y.pow(2) * &c(&v, 1, 4)) + &c(&v, 1, 4);
        assert_eq!(f.partial_by_name("y").unwrap(), &y * &c(&v, 1, 2));
        assert!(c(&v, 7, 3).partial(0).is_zero());
        let inv = y.recip().unwrap();
        assert_eq!(inv.partial(1), -&y.pow(2).recip().unwrap());
        assert_eq!(
            f.partial_by_name("w"),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn eval_examples() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        let p = Point::new(&v, vec![rat(0, 1), rat(3, 1), rat(0, 1)]).unwrap();
        assert_eq!((&y * &c(&v, 1, 2)).eval(&p).unwrap(), rat(3, 2));

        let origin = Point::new(&v, vec![rat(0, 1); 3]).unwrap();
        assert!(matches!(
            y.recip().unwrap().eval(&origin),
            Err(Error::PoleAtPoint(_))
        ));

        let f = &(&y.pow(2) * &c(&v, 1, 4)) + &c(&v, 1, 4);
        let p1 = Point::new(&v, vec![rat(0, 1), rat(1, 1), rat(0, 1)]).unwrap();
        assert_eq!(f.eval(&p1).unwrap(), rat(1, 2));
    }

    #[test]
    fn equality_examples() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        let one = RationalFunction::one(&v);
        assert!((&y * &y.recip().unwrap()).equals(&one).unwrap());
        assert!(!y.equals(&(&y + &one)).unwrap());
        let q = &(&y.pow(2) - &one) / &(&y - &one);
        assert!(q.equals(&(&y + &one)).unwrap());

        let other = VarSet::new(["u", "v"]).unwrap();
        assert!(matches!(
            y.equals(&RationalFunction::one(&other)),
            Err(Error::ChartMismatch(_))
        ));
    }

    #[test]
    fn denominator_is_normalized() {
        let v = xyz();
        let y = RationalFunction::var(&v, 1);
        let f = &RationalFunction::one(&v) / &(&y.scale(&rat(-2, 1)) + &c(&v, 4, 1));
        assert!(f.denominator().leading_coefficient().is_one());
        assert_eq!(f.to_string(), "(-1/2)/(y - 2)");
    }

    #[test]
    fn point_from_map() {
        let v = xyz();
        let mut m = BTreeMap::new();
        m.insert("x".to_string(), rat(1, 1));
        m.insert("y".to_string(), rat(2, 1));
        assert!(Point::from_map(&v, &m).is_err());
        m.insert("z".to_string(), rat(3, 1));
        assert_eq!(Point::from_map(&v, &m).unwrap().values()[2], rat(3, 1));
        m.insert("w".to_string(), rat(3, 1));
        assert!(Point::from_map(&v, &m).is_err());
    }
}
