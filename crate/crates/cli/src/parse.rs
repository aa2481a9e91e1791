use anyhow::{bail, Context, Result};
use domino_core::SignedPermutation;

/// Parses one-line notation: whitespace-separated nonzero integers, the sign
/// of each entry giving its sign in `H_n`. Surrounding parentheses or
/// brackets and commas are tolerated.
pub fn parse_signed_permutation(text: &str) -> Result<SignedPermutation> {
    let cleaned: String = text
        .chars()
        .map(|c| if matches!(c, '(' | ')' | '[' | ']' | ',') { ' ' } else { c })
        .collect();
    let window = cleaned
        .split_whitespace()
        .map(|tok| tok.parse::<i32>().with_context(|| format!("not an integer: {tok:?}")))
        .collect::<Result<Vec<_>>>()?;
    if window.contains(&0) {
        bail!("signed permutation entries must be nonzero");
    }
    Ok(SignedPermutation::from_window(&window)?)
}
