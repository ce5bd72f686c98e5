/// All vectors of `parts` nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(left - v, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

/// Parse `"1,0,2"` (parentheses, `;` and `|` separators also accepted).
pub fn parse_coords(s: &str) -> Result<Vec<u32>, String> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split([',', ';', '|'])
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("`{}`: {e}", t.trim())))
        .collect()
}

pub fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
