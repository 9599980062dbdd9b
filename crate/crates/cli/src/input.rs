use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use sweedler_rb::exactalg::parse_rational;
use sweedler_rb::{LinearOperator, Scalar};

/// A matrix argument is either inline JSON (starting with `[`) or a path.
pub fn read_matrix_source(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('[') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(Path::new(arg)).with_context(|| format!("cannot read matrix file `{arg}`"))
    }
}

/// Parse a row-major JSON array of scalar strings (or integers).
pub fn parse_matrix<S: Scalar>(text: &str, dim: usize) -> Result<LinearOperator<S>> {
    let v: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| anyhow!("matrix is not valid JSON: {e} (line {}, column {})", e.line(), e.column()))?;
    let rows = v.as_array().ok_or_else(|| anyhow!("matrix must be a JSON array of rows"))?;
    if rows.len() != dim {
        bail!("matrix has {} rows, the algebra has dimension {dim}", rows.len());
    }
    let mut out = Vec::with_capacity(dim);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| anyhow!("row {} is not an array", i + 1))?;
        if row.len() != dim {
            bail!("row {} has {} entries, expected {dim}", i + 1, row.len());
        }
        let mut r = Vec::with_capacity(dim);
        for (j, x) in row.iter().enumerate() {
            let s = match x {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                _ => bail!("entry ({}, {}) must be a string or an integer", i + 1, j + 1),
            };
            r.push(parse_scalar::<S>(&s).with_context(|| format!("entry ({}, {})", i + 1, j + 1))?);
        }
        out.push(r);
    }
    Ok(LinearOperator::from_rows(out).expect("square"))
}

pub fn parse_scalar<S: Scalar>(s: &str) -> Result<S> {
    let q = parse_rational(s)?;
    S::from_rational(&q).ok_or_else(|| anyhow!("`{s}` has no image in the chosen field"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use sweedler_rb::{Fp, Rational};

    #[test]
    fn parses_strings_and_integers() {
        let m: LinearOperator<Rational> = parse_matrix(r#"[["1/2", 0], ["-3", "4"]]"#, 2).unwrap();
        assert_eq!(m.to_strings(), vec![vec!["1/2", "0"], vec!["-3", "4"]]);
        let f: LinearOperator<Fp<3>> = parse_matrix(r#"[["1/2", 0], ["-1", "4"]]"#, 2).unwrap();
        assert_eq!(f.to_strings(), vec![vec!["2", "0"], vec!["2", "1"]]);
    }

    #[test]
    fn reports_positions() {
        let e = parse_matrix::<Rational>("[[1, 2],\n [3 4]]", 2).unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(parse_matrix::<Fp<3>>(r#"[["1/3"]]"#, 1).is_err());
    }
}
