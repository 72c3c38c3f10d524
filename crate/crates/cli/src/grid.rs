//! Parsing of parameter lists: complex points as `re,im`, real lists as
//! `a,b,c`, integer ranges as `lo..hi`. Several complex points may share one
//! argument separated by `;`.

use loglambert_core::ComplexValue;

use crate::error::CliError;

fn number(text: &str) -> Result<f64, CliError> {
    let t = text.trim();
    let v = match t {
        "pi" => core::f64::consts::PI,
        "2pi" | "tau" => core::f64::consts::TAU,
        _ => t.parse::<f64>().map_err(|_| CliError::usage(format!("not a number: {t:?}")))?,
    };
    if !v.is_finite() {
        return Err(CliError::usage(format!("not a finite number: {t:?}")));
    }
    Ok(v)
}

/// `re,im` or a bare real.
pub fn parse_complex(text: &str) -> Result<ComplexValue, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(ComplexValue::new(number(re)?, 0.0)),
        [re, im] => Ok(ComplexValue::new(number(re)?, number(im)?)),
        _ => Err(CliError::usage(format!("expected re,im but got {text:?}"))),
    }
}

/// Every `;`-separated point of every argument, in order.
pub fn parse_complex_list(args: &[String]) -> Result<Vec<ComplexValue>, CliError> {
    args.iter().flat_map(|a| a.split(';')).filter(|p| !p.trim().is_empty()).map(parse_complex).collect()
}

/// Comma- or `;`-separated reals across all arguments.
pub fn parse_real_list(args: &[String]) -> Result<Vec<f64>, CliError> {
    args.iter().flat_map(|a| a.split([',', ';'])).filter(|p| !p.trim().is_empty()).map(number).collect()
}

/// Integers given singly, comma-separated or as inclusive `lo..hi` ranges.
pub fn parse_int_list(args: &[String]) -> Result<Vec<i64>, CliError> {
    let mut out = Vec::new();
    for piece in args.iter().flat_map(|a| a.split([',', ';'])).map(str::trim).filter(|p| !p.is_empty()) {
        let int = |t: &str| t.trim().parse::<i64>().map_err(|_| CliError::usage(format!("not an integer: {t:?}")));
        if let Some((lo, hi)) = piece.split_once("..") {
            let (lo, hi) = (int(lo)?, int(hi.trim_start_matches('='))?);
            if hi < lo {
                return Err(CliError::usage(format!("empty range {piece:?}")));
            }
            out.extend(lo..=hi);
        } else {
            out.push(int(piece)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn complex_points() {
        assert_eq!(parse_complex("1,0").unwrap(), ComplexValue::new(1.0, 0.0));
        assert_eq!(parse_complex(" -0.5 , 2").unwrap(), ComplexValue::new(-0.5, 2.0));
        assert_eq!(parse_complex("2pi").unwrap().re, core::f64::consts::TAU);
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("inf,0").is_err());
        let list = parse_complex_list(&s(&["1,0;3,2", "0.3,0.2"])).unwrap();
        assert_eq!(list.len(), 3);
    }

    #[test]
    fn reals_and_ranges() {
        assert_eq!(parse_real_list(&s(&["0.4,0.2,0.1"])).unwrap(), vec![0.4, 0.2, 0.1]);
        assert_eq!(parse_int_list(&s(&["1..4"])).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_int_list(&s(&["2,5", "7"])).unwrap(), vec![2, 5, 7]);
        assert_eq!(parse_int_list(&s(&["-2..=-1"])).unwrap(), vec![-2, -1]);
        assert!(parse_int_list(&s(&["4..1"])).is_err());
    }
}
