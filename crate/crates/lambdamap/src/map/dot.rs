//! Graphviz export: one node per v-orbit, the root drawn distinctly, and
//! boundary darts as labeled leaf nodes.

use std::fmt::Write;

use super::RootedTrivalentMap;

impl RootedTrivalentMap {
    pub fn to_dot(&self) -> String {
        let v_cycles = self.v_cycles();
        let root = self.root();
        let mut vertex_of = std::collections::HashMap::new();
        let mut out = String::from("graph map {\n");
        for (i, cycle) in v_cycles.iter().enumerate() {
            for &d in cycle {
                vertex_of.insert(d, i);
            }
            if cycle.len() == 1 && cycle[0] == root {
                let _ = writeln!(out, "  v{i} [shape=point, width=0.15, label=\"\", xlabel=\"root\"];");
            } else {
                let _ = writeln!(out, "  v{i} [shape=circle, label=\"\"];");
            }
        }
        let boundary = self.boundary();
        for (k, &d) in boundary.iter().enumerate() {
            let _ = writeln!(out, "  b{k} [shape=none, label=\"x{}\"];", k + 1);
            let _ = writeln!(out, "  v{} -- b{k} [label=\"{d}\"];", vertex_of[&d]);
        }
        for pair in self.e_cycles() {
            if pair.len() == 2 {
                let _ = writeln!(
                    out,
                    "  v{} -- v{} [label=\"{}-{}\"];",
                    vertex_of[&pair[0]], vertex_of[&pair[1]], pair[0], pair[1]
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Dart, RootedTrivalentMap};

    #[test]
    fn dot_mentions_root_and_boundary() {
        let m = RootedTrivalentMap::from_cycles(
            vec![Dart(0), Dart(1), Dart(2), Dart(3)],
            &[vec![Dart(1), Dart(2), Dart(3)], vec![Dart(0)]],
            &[vec![Dart(0), Dart(1)], vec![Dart(2)], vec![Dart(3)]],
            Dart(0),
            vec![Dart(2), Dart(3)],
        )
        .unwrap();
        let dot = m.to_dot();
        assert!(dot.starts_with("graph map {"));
        assert!(dot.contains("xlabel=\"root\""));
        assert!(dot.contains("label=\"x1\""));
        assert!(dot.contains("label=\"x2\""));
        assert_eq!(dot, m.to_dot());
    }
}
