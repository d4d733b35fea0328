use super::Permutation;

/// Finds an occurrence of `pat` in `p`.
///
/// Returns the values of the occurrence whose index tuple is lexicographically
/// least, or `None` when `p` avoids `pat`.
pub fn contains_pattern(p: &Permutation, pat: &Permutation) -> Option<Vec<usize>> {
    if pat.len() > p.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    if extend(p.values(), pat.values(), 0, &mut chosen) {
        Some(chosen.iter().map(|&i| p.values()[i]).collect())
    } else {
        None
    }
}

fn extend(text: &[usize], pat: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let k = chosen.len();
    if k == pat.len() {
        return true;
    }
    // Leave room for the remaining pattern entries.
    let last_start = text.len() - (pat.len() - k);
    for i in from..=last_start {
        let fits = chosen.iter().enumerate().all(|(t, &j)| (text[j] < text[i]) == (pat[t] < pat[k]));
        if fits {
            chosen.push(i);
            if extend(text, pat, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn leftmost_witness() {
        assert_eq!(contains_pattern(&p("25134"), &p("132")), Some(vec![2, 5, 3]));
        assert_eq!(contains_pattern(&p("25134"), &p("321")), None);
        assert_eq!(contains_pattern(&p("25134"), &p("1")), Some(vec![2]));
        assert_eq!(contains_pattern(&p("12"), &p("123")), None);
    }
}
