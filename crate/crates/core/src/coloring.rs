//! Vertex colorings and the dominator-coloring check.
//!
//! A vertex `v` dominates a color class `C` when `C` is nonempty and every
//! member of `C` is an out-neighbor of `v`. Which vertices must dominate is
//! set by [`DominationMode`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ColoringError;
use crate::graph::Digraph;

/// Which vertices a dominator coloring must serve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DominationMode {
    /// Every vertex with at least one out-neighbor must dominate a class;
    /// sinks are exempt.
    #[default]
    SinkExempt,
    /// Every vertex must dominate a class. Any digraph with a sink fails.
    Strict,
}

impl DominationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DominationMode::SinkExempt => "sink-exempt",
            DominationMode::Strict => "strict",
        }
    }

    /// Whether a vertex of out-degree `out_degree` must dominate.
    pub fn requires(self, out_degree: usize) -> bool {
        match self {
            DominationMode::SinkExempt => out_degree > 0,
            DominationMode::Strict => true,
        }
    }
}

impl fmt::Display for DominationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DominationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sink-exempt" => Ok(DominationMode::SinkExempt),
            "strict" => Ok(DominationMode::Strict),
            other => Err(format!(
                "unknown mode {other:?} (expected sink-exempt or strict)"
            )),
        }
    }
}

/// A surjective vertex coloring in restricted-growth form: class `j + 1`
/// first appears after class `j` does.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    assignment: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Relabels an arbitrary labelling into canonical form, keeping the
    /// partition.
    pub fn canonicalize<T: PartialEq + Clone>(raw: &[T]) -> Coloring {
        let mut labels: Vec<T> = Vec::new();
        let assignment = raw
            .iter()
            .map(|x| match labels.iter().position(|l| l == x) {
                Some(i) => i,
                None => {
                    labels.push(x.clone());
                    labels.len() - 1
                }
            })
            .collect();
        Coloring {
            assignment,
            k: labels.len(),
        }
    }

    /// Accepts an assignment that is already canonical.
    pub fn from_canonical(assignment: Vec<usize>) -> Result<Coloring, ColoringError> {
        let mut k = 0;
        for &c in &assignment {
            if c > k {
                return Err(ColoringError::NotCanonical);
            }
            if c == k {
                k += 1;
            }
        }
        Ok(Coloring { assignment, k })
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of color classes.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    /// Members of each class, ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    fn check_size(&self, d: &Digraph) -> Result<(), ColoringError> {
        if self.len() != d.n() {
            return Err(ColoringError::SizeMismatch {
                coloring: self.len(),
                digraph: d.n(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = ColoringError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Coloring::from_canonical(v)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Self {
        c.assignment
    }
}

/// One reason a coloring fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Arc whose endpoints share a color.
    Properness { arc: (usize, usize) },
    /// Required vertex that dominates no class.
    Domination { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            ok: violations.is_empty(),
            violations,
        }
    }
}

pub fn is_proper(d: &Digraph, c: &Coloring) -> Result<bool, ColoringError> {
    c.check_size(d)?;
    Ok(d.arcs().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// Classes contained in the out-neighborhood of `v`, ascending.
pub fn dominated_classes(d: &Digraph, v: usize, c: &Coloring) -> Result<Vec<usize>, ColoringError> {
    c.check_size(d)?;
    if v >= d.n() {
        return Err(ColoringError::VertexOutOfRange {
            vertex: v,
            n: d.n(),
        });
    }
    let out = d.out_neighbors(v).expect("range checked above");
    Ok(dominated_by(&out, c))
}

fn dominated_by(out: &[usize], c: &Coloring) -> Vec<usize> {
    // a class is inside N+(v) iff its size equals the number of
    // out-neighbors carrying that color
    let mut inside = vec![0usize; c.k()];
    for &u in out {
        inside[c.color(u)] += 1;
    }
    let mut sizes = vec![0usize; c.k()];
    for &col in c.assignment() {
        sizes[col] += 1;
    }
    (0..c.k())
        .filter(|&j| sizes[j] > 0 && inside[j] == sizes[j])
        .collect()
}

/// Checks properness and domination; reports every violation found.
pub fn verify(d: &Digraph, c: &Coloring, mode: DominationMode) -> Result<Verdict, ColoringError> {
    c.check_size(d)?;
    let mut violations: Vec<Violation> = d
        .arcs()
        .iter()
        .filter(|&&(u, v)| c.color(u) == c.color(v))
        .map(|&arc| Violation::Properness { arc })
        .collect();
    for (v, out) in d.out_lists().iter().enumerate() {
        if mode.requires(out.len()) && dominated_by(out, c).is_empty() {
            violations.push(Violation::Domination { vertex: v });
        }
    }
    Ok(Verdict::from_violations(violations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_path(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn alternating_c4() -> Digraph {
        Digraph::new(4, [(1, 0), (1, 2), (3, 2), (3, 0)]).unwrap()
    }

    fn col(raw: &[usize]) -> Coloring {
        Coloring::from_canonical(raw.to_vec()).unwrap()
    }

    #[test]
    fn properness_examples() {
        assert!(is_proper(&directed_path(3), &col(&[0, 1, 2])).unwrap());
        assert!(!is_proper(&directed_path(3), &col(&[0, 0, 1])).unwrap());
        assert!(is_proper(&alternating_c4(), &col(&[0, 1, 0, 1])).unwrap());
        assert!(is_proper(&directed_path(4), &col(&[0, 1])).is_err());
    }

    #[test]
    fn dominated_class_examples() {
        assert_eq!(
            dominated_classes(&alternating_c4(), 1, &col(&[0, 1, 0, 1])).unwrap(),
            vec![0]
        );
        assert_eq!(
            dominated_classes(&directed_path(3), 0, &col(&[0, 1, 2])).unwrap(),
            vec![1]
        );
        assert!(dominated_classes(&directed_path(3), 2, &col(&[0, 1, 2]))
            .unwrap()
            .is_empty());
        assert!(dominated_classes(&directed_path(3), 3, &col(&[0, 1, 2])).is_err());
    }

    #[test]
    fn verify_examples() {
        let c = col(&[0, 1, 0, 1]);
        assert!(
            verify(&alternating_c4(), &c, DominationMode::SinkExempt)
                .unwrap()
                .ok
        );
        let strict = verify(&alternating_c4(), &c, DominationMode::Strict).unwrap();
        assert!(!strict.ok);
        assert_eq!(
            strict.violations,
            vec![
                Violation::Domination { vertex: 0 },
                Violation::Domination { vertex: 2 }
            ]
        );
        assert!(
            verify(
                &directed_path(4),
                &col(&[0, 1, 2, 3]),
                DominationMode::SinkExempt
            )
            .unwrap()
            .ok
        );
    }

    #[test]
    fn verify_reports_every_violation() {
        let v = verify(
            &directed_path(4),
            &col(&[0, 0, 1, 0]),
            DominationMode::SinkExempt,
        )
        .unwrap();
        assert_eq!(
            v.violations,
            vec![
                Violation::Properness { arc: (0, 1) },
                Violation::Domination { vertex: 0 },
                Violation::Domination { vertex: 2 },
            ]
        );
        assert!(verify(&directed_path(4), &col(&[0, 1]), DominationMode::Strict).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(Coloring::canonicalize(&[5, 5, 2]).assignment(), &[0, 0, 1]);
        assert_eq!(
            Coloring::canonicalize(&[0, 1, 0, 1]).assignment(),
            &[0, 1, 0, 1]
        );
        let c = Coloring::canonicalize(&[2, 0, 2, 1]);
        assert_eq!(c.assignment(), &[0, 1, 0, 2]);
        assert_eq!(c.k(), 3);
        assert_eq!(Coloring::canonicalize::<usize>(&[]).k(), 0);
    }

    #[test]
    fn from_canonical_rejects_gaps() {
        assert_eq!(
            Coloring::from_canonical(vec![1, 0]),
            Err(ColoringError::NotCanonical)
        );
        assert_eq!(
            Coloring::from_canonical(vec![0, 2, 1]),
            Err(ColoringError::NotCanonical)
        );
        assert_eq!(
            col(&[0, 1, 1, 0, 2]).classes(),
            vec![vec![0, 3], vec![1, 2], vec![4]]
        );
    }

    #[test]
    fn mode_parsing() {
        assert_eq!(
            "strict".parse::<DominationMode>().unwrap(),
            DominationMode::Strict
        );
        assert_eq!(
            "sink-exempt".parse::<DominationMode>().unwrap(),
            DominationMode::SinkExempt
        );
        assert!("closed".parse::<DominationMode>().is_err());
        assert_eq!(
            serde_json::to_string(&DominationMode::SinkExempt).unwrap(),
            "\"sink-exempt\""
        );
    }
}
