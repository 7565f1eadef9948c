//! Machine-readable claims report and flat-file artifact serialization.

use crate::error::{Error, Result};
use crate::poly::coeff::Coeff;
use crate::poly::ring::{Poly, Ring};
use crate::poly::text::{parse_poly, print_poly, TextCoeff};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write as _};
use std::path::Path;

/// One verified claim.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimEntry {
    pub id: String,
    /// Verbatim anchor string for the claim's source.
    pub anchor: String,
    pub computed: String,
    pub expected: String,
    pub status: String,
    pub runtime_ms: u128,
}

/// Full report: environment metadata plus the ordered claim list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimsReport {
    pub prime: u64,
    pub precision: String,
    pub seed: u64,
    pub claims: Vec<ClaimEntry>,
}

impl ClaimsReport {
    pub fn new(prime: u64, precision: &str, seed: u64) -> Self {
        ClaimsReport {
            prime,
            precision: precision.to_string(),
            seed,
            claims: Vec::new(),
        }
    }

    /// Record a claim; status derives from computed == expected.
    pub fn check(
        &mut self,
        id: &str,
        anchor: &str,
        computed: impl ToString,
        expected: impl ToString,
        runtime_ms: u128,
    ) -> bool {
        let computed = computed.to_string();
        let expected = expected.to_string();
        let pass = computed == expected;
        self.claims.push(ClaimEntry {
            id: id.to_string(),
            anchor: anchor.to_string(),
            computed,
            expected,
            status: if pass { "pass" } else { "fail" }.to_string(),
            runtime_ms,
        });
        pass
    }

    pub fn failed(&self) -> usize {
        self.claims.iter().filter(|c| c.status != "pass").count()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// Merge another report fragment (claims with the same id are replaced).
    pub fn merge(&mut self, other: ClaimsReport) {
        for c in other.claims {
            if let Some(slot) = self.claims.iter_mut().find(|x| x.id == c.id) {
                *slot = c;
            } else {
                self.claims.push(c);
            }
        }
        self.claims.sort_by(|a, b| a.id.cmp(&b.id));
    }

    /// Human-readable fixed-width table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "prime={} precision={} seed={}\n",
            self.prime, self.precision, self.seed
        ));
        let idw = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let cw = self
            .claims
            .iter()
            .map(|c| c.computed.len())
            .max()
            .unwrap_or(8)
            .max(8)
            .min(40);
        for c in &self.claims {
            let mut computed = c.computed.clone();
            if computed.len() > cw {
                computed.truncate(cw - 1);
                computed.push('…');
            }
            out.push_str(&format!(
                "{:<5} {:<idw$}  {:<cw$}  {:>9} ms  [{}]\n",
                c.status.to_uppercase(),
                c.id,
                computed,
                c.runtime_ms,
                c.anchor,
            ));
        }
        out.push_str(&format!(
            "{} claims, {} failed\n",
            self.claims.len(),
            self.failed()
        ));
        out
    }
}

/// JSON header line of a serialized ideal file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealHeader {
    pub name: String,
    pub nvars: usize,
    pub order: String,
    pub domain: String,
    pub prime: Option<u64>,
    pub ngens: usize,
}

/// Write an ideal: one JSON header line, then one polynomial per line in the
/// shared plain-text format.
pub fn write_ideal<C: TextCoeff>(
    path: &Path,
    name: &str,
    ring: &Ring,
    domain: &str,
    prime: Option<u64>,
    polys: &[Poly<C>],
) -> Result<()> {
    let header = IdealHeader {
        name: name.to_string(),
        nvars: ring.nvars(),
        order: format!("{:?}", ring.order).to_lowercase(),
        domain: domain.to_string(),
        prime,
        ngens: polys.len(),
    };
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    writeln!(f, "{}", serde_json::to_string(&header)?)?;
    for p in polys {
        writeln!(f, "{}", print_poly(p, ring))?;
    }
    Ok(())
}

/// Read an ideal file back; the ring must match the header's variable count.
pub fn read_ideal<C: TextCoeff + Coeff>(
    path: &Path,
    ring: &Ring,
    one: &C,
) -> Result<(IdealHeader, Vec<Poly<C>>)> {
    let f = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut lines = f.lines();
    let header: IdealHeader = serde_json::from_str(
        &lines
            .next()
            .ok_or_else(|| Error::Parse("empty ideal file".into()))??,
    )?;
    if header.nvars != ring.nvars() {
        return Err(Error::Parse(format!(
            "ideal file has {} variables, ring has {}",
            header.nvars,
            ring.nvars()
        )));
    }
    let mut polys = Vec::with_capacity(header.ngens);
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        polys.push(parse_poly(&line, ring, one)?);
    }
    if polys.len() != header.ngens {
        return Err(Error::Parse(format!(
            "header promises {} generators, file has {}",
            header.ngens,
            polys.len()
        )));
    }
    Ok((header, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::mono::Order;
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn report_round_trip_and_exit_count() {
        let mut r = ClaimsReport::new(557, "1e-20", 1);
        assert!(r.check("01-a", "anchor one", 135, 135, 3));
        assert!(!r.check("02-b", "anchor two", 119, 120, 5));
        assert_eq!(r.failed(), 1);
        let json = r.to_json().unwrap();
        let back: ClaimsReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.claims.len(), 2);
        assert_eq!(back.failed(), 1);
        assert!(r.render_table().contains("FAIL"));
    }

    #[test]
    fn ideal_file_round_trip() {
        let ring = Ring::numbered("Y", 3, Order::GrevLex);
        let one = <BigRational as One>::one();
        let p1: Poly<BigRational> = parse_poly("Y1^2 - Y2*Y3", &ring, &one).unwrap();
        let p2: Poly<BigRational> = parse_poly("Y1*Y2 - 2*Y3^2", &ring, &one).unwrap();
        let dir = std::env::temp_dir().join("goepel-ideal-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("t.ideal");
        write_ideal(&path, "t", &ring, "Q", None, &[p1.clone(), p2.clone()]).unwrap();
        let (h, back) = read_ideal(&path, &ring, &one).unwrap();
        assert_eq!(h.ngens, 2);
        assert_eq!(back, vec![p1, p2]);
    }
}
