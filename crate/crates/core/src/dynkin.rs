//! Dynkin diagrams of the classical families and the shapes of their connected subdiagrams.

use serde::Serialize;

use crate::rootsys::Family;

/// Label of a connected subdiagram: family and rank of its induced shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Shape {
    pub family: Family,
    pub rank: usize,
}

impl Shape {
    /// wd of a connected diagram: 2[m/2] for A, B, C and 2[(m-1)/2] for D.
    pub fn wd(&self) -> usize {
        match self.family {
            Family::D => 2 * ((self.rank - 1) / 2),
            _ => 2 * (self.rank / 2),
        }
    }
}

impl std::fmt::Display for Shape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Edges of the ambient diagram on Bourbaki positions 0..rank.
pub fn ambient_edges(family: Family, rank: usize) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = (1..rank).map(|k| (k - 1, k)).collect();
    if family == Family::D && rank >= 4 {
        e.pop();
        e.push((rank - 3, rank - 1));
    }
    e
}

/// Shape of a connected vertex set (Bourbaki positions) of the ambient diagram.
///
/// B/C components containing the multiple bond keep the ambient family; a D
/// component with the fork and both ends is D_m (m >= 4), with three vertices
/// it is A_3; everything else is a path.
pub fn shape(family: Family, rank: usize, vertices: &[usize]) -> Shape {
    let m = vertices.len();
    let has = |v: usize| vertices.contains(&v);
    match family {
        Family::B | Family::C if m >= 2 && has(rank - 1) && has(rank - 2) => Shape { family, rank: m },
        Family::D if rank >= 4 && m >= 4 && has(rank - 3) && has(rank - 2) && has(rank - 1) => {
            Shape { family: Family::D, rank: m }
        }
        _ => Shape { family: Family::A, rank: m },
    }
}

/// Connected components of a graph on `0..n` given by an edge list.
pub fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Whether a vertex set is connected in the ambient diagram.
pub fn is_connected(family: Family, rank: usize, vertices: &[usize]) -> bool {
    if vertices.is_empty() {
        return false;
    }
    let edges: Vec<(usize, usize)> = ambient_edges(family, rank)
        .into_iter()
        .filter(|(a, b)| vertices.contains(a) && vertices.contains(b))
        .collect();
    let idx = |v: usize| vertices.iter().position(|&x| x == v).expect("member");
    let local: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    components(vertices.len(), &local).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wd_values() {
        assert_eq!(Shape { family: Family::A, rank: 7 }.wd(), 6);
        assert_eq!(Shape { family: Family::D, rank: 8 }.wd(), 6);
        assert_eq!(Shape { family: Family::A, rank: 1 }.wd(), 0);
    }

    #[test]
    fn fork_shapes() {
        assert_eq!(shape(Family::D, 5, &[2, 3, 4]).family, Family::A);
        assert_eq!(shape(Family::D, 5, &[1, 2, 3, 4]), Shape { family: Family::D, rank: 4 });
        assert_eq!(shape(Family::D, 5, &[1, 2, 3]).family, Family::A);
        assert_eq!(shape(Family::B, 4, &[2, 3]), Shape { family: Family::B, rank: 2 });
        assert_eq!(shape(Family::C, 4, &[0, 1]).family, Family::A);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(Family::D, 4, &[0, 1, 3]));
        assert!(!is_connected(Family::D, 4, &[2, 3]));
        assert!(!is_connected(Family::A, 4, &[0, 2]));
    }
}
