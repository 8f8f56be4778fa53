use serde::{Deserialize, Serialize};
use std::fmt;

/// Dimension table indexed by (internal weight, parity), the engine's
/// universal comparison currency. Entries are only meaningful inside the
/// trusted window `0..=trusted_upto`; `trusted_upto < 0` flags an empty
/// window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertFunction {
    pub even: Vec<usize>,
    pub odd: Vec<usize>,
    pub trusted_upto: i64,
}

impl HilbertFunction {
    pub fn new(even: Vec<usize>, odd: Vec<usize>, trusted_upto: i64) -> Self {
        HilbertFunction { even, odd, trusted_upto }
    }

    pub fn zero(bound: u32, trusted_upto: i64) -> Self {
        HilbertFunction {
            even: vec![0; bound as usize + 1],
            odd: vec![0; bound as usize + 1],
            trusted_upto,
        }
    }

    pub fn even_at(&self, w: u32) -> usize {
        self.even.get(w as usize).copied().unwrap_or(0)
    }

    pub fn odd_at(&self, w: u32) -> usize {
        self.odd.get(w as usize).copied().unwrap_or(0)
    }

    pub fn is_trusted(&self, w: u32) -> bool {
        (w as i64) <= self.trusted_upto
    }

    /// The overlap of the two trusted windows, further capped by `upto`.
    pub fn common_window(&self, other: &Self, upto: u32) -> i64 {
        self.trusted_upto.min(other.trusted_upto).min(upto as i64)
    }

    /// Equality in every slot of the common trusted window capped at `upto`.
    pub fn agrees_with(&self, other: &Self, upto: u32) -> bool {
        let cap = self.common_window(other, upto);
        (0..=cap).all(|w| {
            let w = w as u32;
            self.even_at(w) == other.even_at(w) && self.odd_at(w) == other.odd_at(w)
        })
    }

    /// Odd entries vanish in every trusted slot up to `upto`.
    pub fn odd_vanishes(&self, upto: u32) -> bool {
        let cap = self.trusted_upto.min(upto as i64);
        (0..=cap).all(|w| self.odd_at(w as u32) == 0)
    }

    /// Total dimension over trusted slots; `None` when the window is empty.
    pub fn trusted_total(&self) -> Option<usize> {
        if self.trusted_upto < 0 {
            return None;
        }
        let cap = self.trusted_upto as usize;
        let sum = |v: &[usize]| v.iter().take(cap + 1).sum::<usize>();
        Some(sum(&self.even) + sum(&self.odd))
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_row = |v: &[usize]| {
            v.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
        };
        write!(
            f,
            "even: [{}]  odd: [{}]  trusted_upto: {}",
            fmt_row(&self.even),
            fmt_row(&self.odd),
            self.trusted_upto
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agreement_respects_windows() {
        let a = HilbertFunction::new(vec![1, 1, 0], vec![0, 0, 0], 2);
        let b = HilbertFunction::new(vec![1, 1, 7], vec![0, 0, 9], 1);
        assert!(a.agrees_with(&b, 5));
        assert!(!a.agrees_with(&b, 5) == false);
        let c = HilbertFunction::new(vec![1, 2], vec![0, 0], 1);
        assert!(!a.agrees_with(&c, 5));
    }
}
