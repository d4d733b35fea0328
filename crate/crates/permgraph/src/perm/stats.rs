use serde::Serialize;

use super::Permutation;

/// Descent set plus the three consecutive-pattern counts used in the
/// monotone-run estimates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DescentProfile {
    /// Indices `i` with `π(i) > π(i+1)`.
    pub descent_set: Vec<usize>,
    pub x_d: usize,
    /// Runs of three consecutive descents.
    pub x_ddd: usize,
    /// Occurrences of descent, descent, ascent, descent, descent.
    pub x_ddadd: usize,
    /// One-line notation cut after each descent, e.g. `67|5|4|19|8|23`.
    pub segmentation: String,
}

pub fn descent_profile(p: &Permutation) -> DescentProfile {
    let v = p.values();
    let n = v.len();
    let desc: Vec<bool> = (0..n.saturating_sub(1)).map(|i| v[i] > v[i + 1]).collect();
    let descent_set: Vec<usize> = (0..desc.len()).filter(|&i| desc[i]).map(|i| i + 1).collect();
    let x_ddd = desc.windows(3).filter(|w| w[0] && w[1] && w[2]).count();
    let x_ddadd = desc.windows(5).filter(|w| w[0] && w[1] && !w[2] && w[3] && w[4]).count();

    let mut segmentation = String::new();
    for (i, &x) in v.iter().enumerate() {
        if n > 9 && i > 0 && !desc[i - 1] {
            segmentation.push(',');
        }
        segmentation.push_str(&x.to_string());
        if i + 1 < n && desc[i] {
            segmentation.push('|');
        }
    }

    DescentProfile { x_d: descent_set.len(), descent_set, x_ddd, x_ddadd, segmentation }
}

/// A contiguous index window `[start, end]` whose values are `[min, max]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    pub min: usize,
    pub max: usize,
}

/// The shortest nontrivial interval, leftmost among the shortest.
pub fn find_interval(p: &Permutation) -> Option<Interval> {
    let v = p.values();
    let n = v.len();
    for len in 2..n {
        for start in 0..=n - len {
            let w = &v[start..start + len];
            let lo = *w.iter().min().unwrap();
            let hi = *w.iter().max().unwrap();
            if hi - lo + 1 == len {
                return Some(Interval { start: start + 1, end: start + len, min: lo, max: hi });
            }
        }
    }
    None
}

/// No nontrivial interval. Every permutation of length at most 2 is simple by this definition.
pub fn is_simple(p: &Permutation) -> bool {
    find_interval(p).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_example() {
        let d = descent_profile(&p("675419823"));
        assert_eq!(d.descent_set, vec![2, 3, 4, 6, 7]);
        assert_eq!(d.segmentation, "67|5|4|19|8|23");
        assert_eq!(d.x_d, 5);
        assert_eq!(d.x_ddd, 1);
        // 5 4 1 9 8 2 at indices 3..8.
        assert_eq!(d.x_ddadd, 1);
    }

    #[test]
    fn ddadd_counts() {
        // 3 2 1 4 ... : d d a then need d d.
        let d = descent_profile(&p("321654"));
        assert_eq!(d.x_ddadd, 1);
        assert_eq!(d.x_ddd, 0);
        let id = descent_profile(&Permutation::identity(7));
        assert_eq!((id.x_d, id.x_ddd, id.x_ddadd), (0, 0, 0));
    }

    #[test]
    fn intervals() {
        let q = p("3,1,6,4,7,5,9,2,10,8");
        assert_eq!(find_interval(&q), Some(Interval { start: 3, end: 6, min: 4, max: 7 }));
        assert!(is_simple(&p("3142")));
        assert!(is_simple(&p("12")));
        assert!(is_simple(&p("1")));
        assert!(!is_simple(&p("123")));
        assert_eq!(find_interval(&p("2413")), None);
    }
}
