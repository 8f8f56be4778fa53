use std::cmp::Ordering;

use super::table::VarTable;

/// Monomial order tag. Both orders respect the table's weights in the sense
/// that `GrevLex` grades by weighted degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with the table's weights.
    #[default]
    GrevLex,
    /// Plain lexicographic in table order.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u16], b: &[u16], table: &VarTable) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let wa: u32 = a.iter().zip(table.weights()).map(|(&e, &w)| e as u32 * w).sum();
                let wb: u32 = b.iter().zip(table.weights()).map(|(&e, &w)| e as u32 * w).sum();
                match wa.cmp(&wb) {
                    Ordering::Equal => {}
                    o => return o,
                }
                // Reverse lex tie-break with later table variables more
                // significant: scanning from the first variable, the first
                // difference decides and the larger exponent loses.
                for i in 0..a.len() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::GrevLex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}
