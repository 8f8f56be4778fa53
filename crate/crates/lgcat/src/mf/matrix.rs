use std::fmt;
use std::sync::Arc;

use num::BigRational;

use crate::error::{LgError, Result};
use crate::ring::{Polynomial, VarTable};

/// Dense matrix of polynomials; small ranks only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(table: &Arc<VarTable>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| Polynomial::zero(table)).collect(),
        }
    }

    pub fn identity(table: &Arc<VarTable>, n: usize) -> Self {
        let mut m = Self::zero(table, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Polynomial::one(table);
        }
        m
    }

    pub fn scalar(table: &Arc<VarTable>, n: usize, p: &Polynomial) -> Self {
        let mut m = Self::zero(table, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = p.clone();
        }
        m
    }

    pub fn from_rows(table: &Arc<VarTable>, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LgError::DimensionMismatch("ragged matrix rows".into()));
        }
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            for p in row {
                if p.table().as_ref() != table.as_ref() {
                    return Err(LgError::TableMismatch("matrix entry table".into()));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, entries })
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn table(&self) -> Option<&Arc<VarTable>> {
        self.entries.first().map(|p| p.table())
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(LgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let table = self
            .table()
            .or_else(|| rhs.table())
            .cloned()
            .ok_or_else(|| LgError::DimensionMismatch("empty matrix product".into()))?;
        let mut out = PolyMatrix::zero(&table, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Polynomial::zero(&table);
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LgError::DimensionMismatch("matrix addition".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LgError::DimensionMismatch("matrix subtraction".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&rhs.entries) {
            *a = &*a - b;
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = -&*e;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> PolyMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.scale(c);
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let table = match self.table() {
            Some(t) => t.clone(),
            None => return PolyMatrix { rows: self.cols, cols: self.rows, entries: Vec::new() },
        };
        let mut out = PolyMatrix::zero(&table, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn derivative(&self, v: usize) -> PolyMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.derivative(v);
        }
        out
    }

    /// Transfer every entry to another table (same variable names).
    pub fn transfer(&self, target: &Arc<VarTable>) -> Result<PolyMatrix> {
        let mut out = PolyMatrix::zero(target, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).transfer(target)?;
            }
        }
        Ok(out)
    }

    /// First (row, col) at which the two matrices differ.
    pub fn first_difference(&self, rhs: &PolyMatrix) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.at(i, j) != rhs.at(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
