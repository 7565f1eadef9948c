use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector over a fixed variable set, with cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: SmallVec<[u8; 16]>,
    pub deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u8]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            deg: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect();
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u8; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u8; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    GrevLex,
    Lex,
    /// Block elimination order: the first `split` variables are eliminated
    /// (compared by grevlex first), ties broken by grevlex on the rest.
    Elim(usize),
}

impl Order {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Order::GrevLex => grevlex(&a.exps, &b.exps, a.deg, b.deg),
            Order::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            Order::Elim(split) => {
                let (a1, a2) = a.exps.split_at(*split);
                let (b1, b2) = b.exps.split_at(*split);
                let d = |s: &[u8]| s.iter().map(|&e| e as u32).sum::<u32>();
                let (da1, db1) = (d(a1), d(b1));
                grevlex(a1, b1, da1, db1)
                    .then_with(|| grevlex(a2, b2, a.deg - da1, b.deg - db1))
            }
        }
    }
}

fn grevlex(a: &[u8], b: &[u8], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {
            for (x, y) in a.iter().zip(b.iter()).rev() {
                if x != y {
                    // the last differing exponent decides, reversed
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
        o => o,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u8]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_standard_examples() {
        let ord = Order::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in grevlex(x,y,z)
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(ord.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn elim_order_prefers_first_block() {
        let ord = Order::Elim(1);
        // any monomial containing t beats any t-free one
        assert_eq!(
            ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[1, 3, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_into(&b), m(&[0, 1, 1]));
        assert_eq!(a.lcm(&b), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).coprime(&m(&[0, 1, 1])));
    }
}
