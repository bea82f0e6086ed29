//! Text input formats.
//!
//! A matrix file starts with a header `m n` followed by `m` rows of `n`
//! nonnegative integers. The COLUMNS are the vectors `a_1, …, a_n`. Anything
//! after `#` on a line is ignored.
//!
//! A generators file holds one binomial per line, the exponent vectors of
//! its two monomials separated by `|`.

use std::fmt;
use std::io::Read;

use num_bigint::BigInt;
use toric_ci::{Binomial, Configuration, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

/// Contents of `path`, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, InputError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError(format!("stdin: {}", e)))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {}", path, e)))
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((k + 1, body))
    })
}

fn parse_int(tok: &str, line: usize) -> Result<BigInt, InputError> {
    tok.parse::<BigInt>()
        .map_err(|_| InputError(format!("line {}: `{}` is not an integer", line, tok)))
}

fn parse_count(tok: &str, what: &str) -> Result<usize, InputError> {
    match tok.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => err(format!("header: {} must be a positive integer, got `{}`", what, tok)),
    }
}

/// Matrix of a matrix file. Entries are nonnegative; columns may be zero.
pub fn parse_matrix(text: &str) -> Result<IntMatrix, InputError> {
    let mut lines = content_lines(text);
    let Some((hl, header)) = lines.next() else {
        return err("empty matrix file");
    };
    let dims: Vec<&str> = header.split_whitespace().collect();
    if dims.len() != 2 {
        return err(format!("line {}: header must be `m n`", hl));
    }
    let m = parse_count(dims[0], "m")?;
    let n = parse_count(dims[1], "n")?;
    let mut rows = Vec::with_capacity(m);
    for (ln, body) in lines {
        if rows.len() == m {
            return err(format!("line {}: more than {} rows", ln, m));
        }
        let row = body
            .split_whitespace()
            .map(|t| parse_int(t, ln))
            .collect::<Result<Vec<BigInt>, _>>()?;
        if row.len() != n {
            return err(format!("line {}: expected {} entries, found {}", ln, n, row.len()));
        }
        if row.iter().any(|v| v.sign() == num_bigint::Sign::Minus) {
            return err(format!("line {}: entries must be nonnegative", ln));
        }
        rows.push(row);
    }
    if rows.len() != m {
        return err(format!("expected {} rows, found {}", m, rows.len()));
    }
    IntMatrix::from_rows(&rows).map_err(|e| InputError(e.to_string()))
}

/// Configuration whose vectors are the columns of a matrix file.
pub fn parse_configuration(text: &str) -> Result<Configuration, InputError> {
    let m = parse_matrix(text)?;
    if let Some(j) = (0..m.cols()).find(|&j| m.column(j).iter().all(|v| v.sign() == num_bigint::Sign::NoSign)) {
        return err(format!("column {} is zero", j + 1));
    }
    Configuration::from_matrix(&m).map_err(|e| InputError(e.to_string()))
}

/// A vector given as comma- or space-separated integers.
pub fn parse_vector(arg: &str) -> Result<Vec<BigInt>, InputError> {
    let toks: Vec<&str> = arg.split([',', ' ']).filter(|t| !t.is_empty()).collect();
    if toks.is_empty() {
        return err("empty vector");
    }
    toks.iter()
        .map(|t| t.parse::<BigInt>().map_err(|_| InputError(format!("`{}` is not an integer", t))))
        .collect()
}

pub fn parse_generators(text: &str, nvars: usize) -> Result<Vec<Binomial>, InputError> {
    let mut out = Vec::new();
    for (ln, body) in content_lines(text) {
        let Some((lhs, rhs)) = body.split_once('|') else {
            return err(format!("line {}: expected `alpha | beta`", ln));
        };
        let side = |s: &str| -> Result<Vec<BigInt>, InputError> {
            let v = s
                .split([',', ' ', '\t'])
                .filter(|t| !t.is_empty())
                .map(|t| parse_int(t, ln))
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != nvars {
                return err(format!("line {}: expected {} exponents, found {}", ln, nvars, v.len()));
            }
            Ok(v)
        };
        let g = Binomial::new(side(lhs)?, side(rhs)?).map_err(|e| InputError(format!("line {}: {}", ln, e)))?;
        out.push(g);
    }
    Ok(out)
}

/// Matrix file text for a configuration, with optional leading comment lines.
pub fn format_matrix(a: &Configuration, comments: &[String]) -> String {
    let mut s = String::new();
    for c in comments {
        s.push_str("# ");
        s.push_str(c);
        s.push('\n');
    }
    s.push_str(&format!("{} {}\n", a.dim(), a.len()));
    for k in 0..a.dim() {
        let row: Vec<String> = a.vectors().iter().map(|v| v[k].to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_are_vectors() {
        let a = parse_configuration("# comment\n2 3\n1 0 2  # trailing\n0 1 3\n").unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(a.vector(2), &[BigInt::from(2), BigInt::from(3)]);
    }

    #[test]
    fn malformed_matrices() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("2\n1 2\n").is_err());
        assert!(parse_matrix("2 2\n1 2\n").is_err());
        assert!(parse_matrix("2 2\n1 2\n3\n").is_err());
        assert!(parse_matrix("1 2\n1 -2\n").is_err());
        assert!(parse_matrix("1 2\n1 x\n").is_err());
        assert!(parse_matrix("1 1\n1\n2\n").is_err());
        let zero = parse_configuration("2 2\n1 0\n0 0\n").unwrap_err();
        assert_eq!(zero.0, "column 2 is zero");
    }

    #[test]
    fn generators_and_vectors() {
        let g = parse_generators("3 0 | 0 2\n\n# skip\n1,1 | 0,0\n", 2).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].to_string(), "x(1)^3 - x(2)^2");
        assert!(parse_generators("1 2 3\n", 3).is_err());
        assert!(parse_generators("1 2 | 3\n", 2).is_err());
        assert_eq!(parse_vector("23,12,10").unwrap().len(), 3);
        assert!(parse_vector("1,a").is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let text = "3 2\n1 4\n0 5\n2 6\n";
        let a = parse_configuration(text).unwrap();
        assert_eq!(format_matrix(&a, &[]), text);
        let with = format_matrix(&a, &["expect: true".into()]);
        assert_eq!(parse_configuration(&with).unwrap(), a);
    }
}
