use crate::error::{Error, Result};
use crate::symbolic::{parse_expression, Rational, RationalFunction, VarSet};

/// A single global coordinate chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    vars: VarSet,
}

impl Chart {
    pub fn new<I, S>(coordinates: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars = VarSet::new(coordinates)?;
        if vars.is_empty() {
            return Err(Error::InvalidChart(
                "a chart needs at least one coordinate".into(),
            ));
        }
        Ok(Chart { vars })
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn coordinates(&self) -> &[String] {
        self.vars.names()
    }

    /// The coordinate function `x^i`.
    pub fn coordinate(&self, i: usize) -> RationalFunction {
        RationalFunction::var(&self.vars, i)
    }

    pub fn constant(&self, c: Rational) -> RationalFunction {
        RationalFunction::constant(&self.vars, c)
    }

    pub fn int(&self, c: i64) -> RationalFunction {
        RationalFunction::from_int(&self.vars, c)
    }

    pub fn zero(&self) -> RationalFunction {
        RationalFunction::zero(&self.vars)
    }

    pub fn one(&self) -> RationalFunction {
        RationalFunction::one(&self.vars)
    }

    pub fn parse(&self, expr: &str) -> Result<RationalFunction> {
        parse_expression(expr, &self.vars)
    }

    /// `n` for a chart of dimension `2n+1`.
    pub fn contact_n(&self) -> Result<usize> {
        let d = self.dim();
        if d % 2 == 1 {
            Ok(d / 2)
        } else {
            Err(Error::InvalidChart(format!(
                "contact structures need odd dimension, got {d}"
            )))
        }
    }
}
