use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{chromatic_number, k_color, Coloring, ColoringError};
use crate::graph::dense::{bit, Dense, Mask};
use crate::graph::{canonical_form_colored, delete_vertex, CanonicalForm, Graph, Role, Vertex};

/// One automorphism class of lonely-color supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyPattern {
    /// A representative support: the union of the smallest color classes.
    pub support: BTreeSet<Vertex>,
    pub roles: Vec<Option<Role>>,
    /// Colorings (up to color permutation) whose support lies in this class.
    pub colorings: usize,
}

/// Enumerates every proper 4-coloring up to color permutation, takes the
/// union of its smallest color classes, and returns the distinct supports up
/// to automorphism. Exhaustive, so only meant for small graphs.
pub fn lonely_color_classes(g: &Graph) -> Result<Vec<LonelyPattern>, ColoringError> {
    let chi = chromatic_number(g);
    if chi != 4 {
        return Err(ColoringError::NotFourChromatic(chi));
    }
    let d = Dense::of(g);
    let mut found: BTreeMap<CanonicalForm, LonelyPattern> = BTreeMap::new();
    let mut classes: Vec<Mask> = Vec::new();
    enumerate(&d.adj, 0, &mut classes, &mut |cl| {
        let min = cl.iter().map(|c| c.count_ones()).min().expect("four classes");
        let support: BTreeSet<Vertex> =
            cl.iter().filter(|c| c.count_ones() == min).flat_map(|&c| crate::graph::dense::ones(c)).map(|i| d.ids[i]).collect();
        let marks: BTreeMap<Vertex, u32> = support.iter().map(|&v| (v, 1)).collect();
        let key = canonical_form_colored(g, &marks);
        found
            .entry(key)
            .or_insert_with(|| LonelyPattern {
                roles: support.iter().map(|&v| g.label(v)).collect(),
                support: support.clone(),
                colorings: 0,
            })
            .colorings += 1;
    });
    let mut out: Vec<LonelyPattern> = found.into_values().collect();
    out.sort_by(|a, b| (a.support.len(), &a.roles, &a.support).cmp(&(b.support.len(), &b.roles, &b.support)));
    Ok(out)
}

fn enumerate(adj: &[Mask], v: usize, classes: &mut Vec<Mask>, visit: &mut dyn FnMut(&[Mask])) {
    let n = adj.len();
    if classes.len() + (n - v) < 4 {
        return;
    }
    if v == n {
        visit(classes);
        return;
    }
    for c in 0..classes.len() {
        if classes[c] & adj[v] == 0 {
            classes[c] |= bit(v);
            enumerate(adj, v + 1, classes, visit);
            classes[c] &= !bit(v);
        }
    }
    if classes.len() < 4 {
        classes.push(bit(v));
        enumerate(adj, v + 1, classes, visit);
        classes.pop();
    }
}

/// A proper 4-coloring in which `v` is the only vertex of color 3, if any.
pub fn lonely_witness(g: &Graph, v: Vertex) -> Option<Coloring> {
    let h = delete_vertex(g, v).ok()?;
    let mut c = k_color(&h, 3)?;
    c.0.insert(v, 3);
    debug_assert!(c.is_proper(g, 4));
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle};

    #[test]
    fn k4_has_one_class() {
        let p = lonely_color_classes(&complete(4)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].support.len(), 4);
    }

    #[test]
    fn base_graph_patterns() {
        let b = crate::constructors::base_graph();
        let p = lonely_color_classes(b.graph()).unwrap();
        let roles: Vec<Vec<Option<Role>>> = p.iter().map(|x| x.roles.clone()).collect();
        assert_eq!(
            roles,
            vec![
                vec![Some(Role::CentralHub)],
                vec![Some(Role::SectionHub)],
                vec![Some(Role::Rim)],
                vec![Some(Role::Rim), Some(Role::Rim)],
            ]
        );
    }

    #[test]
    fn rejects_three_chromatic() {
        assert_eq!(lonely_color_classes(&cycle(5).unwrap()), Err(ColoringError::NotFourChromatic(3)));
    }
}
