use super::CliError;

/// `"a:b:n"` to `n` evenly spaced points from `a` to `b` inclusive.
pub fn parse_grid(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("grid '{s}' is not of the form a:b:n"));
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, n] = parts[..] else {
        return Err(bad());
    };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 || !a.is_finite() || !b.is_finite() || (n == 1 && a != b) {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    let h = (b - a) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| if i == n - 1 { b } else { a + i as f64 * h })
        .collect())
}

/// A grid `"a:b:n"` or a comma-separated list of numbers.
pub fn parse_list_or_grid(s: &str) -> Result<Vec<f64>, CliError> {
    if s.contains(':') {
        return parse_grid(s);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Usage(format!("'{t}' is not a number")))
        })
        .collect()
}

/// `"k"`, `"a..b"` (b excluded) or `"a..=b"` (b included).
pub fn parse_index_range(s: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || CliError::Usage(format!("'{s}' is not an index or range"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    if let Some((a, b)) = s.split_once("..=") {
        let (a, b) = (num(a)?, num(b)?);
        return if a <= b { Ok(a..=b) } else { Err(bad()) };
    }
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        return if a < b { Ok(a..=b - 1) } else { Err(bad()) };
    }
    let k = num(s)?;
    Ok(k..=k)
}
