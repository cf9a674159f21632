use epispec::benchmark::snap_mu;

const ENDPOINT_SLACK: f64 = 1e-9;

/// Parses `start:stop:step` (inclusive of `stop` within 1e-9), a comma list,
/// or a single value. Values are `start + k·step`, rounded to 12 decimals.
pub fn parse_range(text: &str) -> Result<Vec<f64>, String> {
    let num = |s: &str| -> Result<f64, String> {
        let v: f64 = s.trim().parse().map_err(|_| format!("'{s}' is not a number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("'{s}' is not finite"))
        }
    };
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
            if !(step > 0.0) {
                return Err(format!("step must be positive in '{text}'"));
            }
            if stop < start {
                return Err(format!("stop is below start in '{text}'"));
            }
            let count = ((stop - start) / step + ENDPOINT_SLACK / step).floor() as usize + 1;
            Ok((0..count).map(|k| snap_mu(start + k as f64 * step)).collect())
        }
        [single] => single.split(',').map(|s| num(s).map(snap_mu)).collect(),
        _ => Err(format!("expected start:stop:step, a comma list or a value, got '{text}'")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_grid() {
        let v = parse_range("0:0.5:0.05").unwrap();
        assert_eq!(v.len(), 11);
        assert_eq!(v[3], 0.15);
        assert_eq!(v[6], 0.3);
        assert_eq!(*v.last().unwrap(), 0.5);
        assert_eq!(parse_range("0.1:0.1:0.05").unwrap(), vec![0.1]);
        assert_eq!(parse_range("0:1:0.3").unwrap(), vec![0.0, 0.3, 0.6, 0.9]);
    }

    #[test]
    fn lists_and_errors() {
        assert_eq!(parse_range("0.2").unwrap(), vec![0.2]);
        assert_eq!(parse_range("0,0.25, 0.5").unwrap(), vec![0.0, 0.25, 0.5]);
        assert!(parse_range("0:0.5:0").is_err());
        assert!(parse_range("0.5:0:0.1").is_err());
        assert!(parse_range("a:1:0.1").is_err());
        assert!(parse_range("0:1").is_err());
        assert!(parse_range("nan").is_err());
    }
}
