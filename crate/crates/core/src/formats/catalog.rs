//! Embedded fixture graphs: the 36 connected graphs whose edge ideal has a
//! Cohen-Macaulay symbolic square, plus two worked examples.

use crate::error::Result;
use crate::graph::Graph;

/// A named graph stored as a static edge list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub label: &'static str,
    pub vertex_count: usize,
    pub edges: &'static [(usize, usize)],
}

impl Fixture {
    pub fn graph(&self) -> Result<Graph> {
        Graph::new(self.vertex_count, self.edges.iter().copied())
    }
}

/// Connected graphs with Cohen-Macaulay `I(G)^(2)`, in table order.
pub const CM36: [Fixture; 36] = [
    Fixture {
        label: "cm36-01",
        vertex_count: 2,
        edges: &[(1, 2)],
    },
    Fixture {
        label: "cm36-02",
        vertex_count: 3,
        edges: &[(1, 2), (1, 3), (2, 3)],
    },
    Fixture {
        label: "cm36-03",
        vertex_count: 4,
        edges: &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    },
    Fixture {
        label: "cm36-04",
        vertex_count: 5,
        edges: &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)],
    },
    Fixture {
        label: "cm36-05",
        vertex_count: 5,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    },
    Fixture {
        label: "cm36-06",
        vertex_count: 6,
        edges: &[(1, 2), (1, 5), (1, 6), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6)],
    },
    Fixture {
        label: "cm36-07",
        vertex_count: 6,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    },
    Fixture {
        label: "cm36-08",
        vertex_count: 7,
        edges: &[(1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 4), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)],
    },
    Fixture {
        label: "cm36-09",
        vertex_count: 7,
        edges: &[(1, 2), (1, 7), (2, 3), (2, 4), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)],
    },
    Fixture {
        label: "cm36-10",
        vertex_count: 7,
        edges: &[(1, 2), (1, 3), (1, 6), (1, 7), (2, 3), (2, 6), (2, 7), (3, 4), (3, 7), (4, 5), (5, 6), (6, 7)],
    },
    Fixture {
        label: "cm36-11",
        vertex_count: 7,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
    },
    Fixture {
        label: "cm36-12",
        vertex_count: 8,
        edges: &[(1, 2), (1, 3), (1, 6), (1, 7), (2, 4), (2, 6), (2, 7), (3, 5), (3, 7), (3, 8), (4, 5), (4, 6), (4, 8), (5, 7), (5, 8), (6, 8)],
    },
    Fixture {
        label: "cm36-13",
        vertex_count: 8,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 8), (3, 4), (3, 8), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8)],
    },
    Fixture {
        label: "cm36-14",
        vertex_count: 8,
        edges: &[(1, 2), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 7), (3, 4), (3, 8), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8)],
    },
    Fixture {
        label: "cm36-15",
        vertex_count: 8,
        edges: &[(1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (3, 4), (3, 7), (3, 8), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)],
    },
    Fixture {
        label: "cm36-16",
        vertex_count: 8,
        edges: &[(1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 7), (2, 8), (3, 4), (3, 5), (3, 7), (3, 8), (4, 5), (4, 7), (4, 8), (5, 6), (5, 8), (7, 8)],
    },
    Fixture {
        label: "cm36-17",
        vertex_count: 8,
        edges: &[(1, 3), (1, 4), (1, 5), (1, 6), (1, 8), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (7, 8)],
    },
    Fixture {
        label: "cm36-18",
        vertex_count: 8,
        edges: &[(1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 7), (4, 5), (5, 6), (6, 7), (7, 8)],
    },
    Fixture {
        label: "cm36-19",
        vertex_count: 8,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (4, 5), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)],
    },
    Fixture {
        label: "cm36-20",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 7), (2, 3), (2, 7), (3, 4), (3, 5), (3, 9), (4, 5), (4, 6), (4, 8), (4, 9), (5, 6), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-21",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 8), (1, 9), (2, 3), (2, 8), (2, 9), (3, 4), (3, 9), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-22",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 7), (1, 8), (2, 3), (2, 7), (2, 8), (3, 4), (3, 5), (4, 5), (4, 6), (4, 9), (5, 6), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-23",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7), (5, 9), (6, 7), (8, 9)],
    },
    Fixture {
        label: "cm36-24",
        vertex_count: 9,
        edges: &[(1, 2), (1, 6), (1, 7), (1, 8), (2, 3), (3, 4), (3, 5), (3, 9), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-25",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 7), (1, 8), (2, 3), (2, 4), (2, 8), (2, 9), (3, 4), (3, 5), (3, 9), (4, 5), (4, 6), (4, 9), (5, 6), (5, 7), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8)],
    },
    Fixture {
        label: "cm36-26",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 6), (1, 7), (1, 8), (2, 3), (2, 7), (2, 8), (2, 9), (3, 4), (3, 8), (3, 9), (4, 5), (4, 6), (4, 8), (4, 9), (5, 6), (5, 7), (5, 9), (6, 7), (6, 8), (7, 9)],
    },
    Fixture {
        label: "cm36-27",
        vertex_count: 9,
        edges: &[(1, 2), (1, 6), (1, 7), (2, 3), (2, 9), (3, 4), (3, 5), (3, 8), (3, 9), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-28",
        vertex_count: 9,
        edges: &[(1, 2), (1, 9), (2, 3), (2, 7), (3, 4), (3, 5), (3, 8), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-29",
        vertex_count: 9,
        edges: &[(1, 2), (1, 7), (1, 8), (1, 9), (2, 3), (2, 4), (2, 8), (2, 9), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-30",
        vertex_count: 9,
        edges: &[(1, 2), (1, 6), (1, 7), (2, 3), (2, 4), (2, 9), (3, 4), (3, 5), (3, 8), (3, 9), (4, 5), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-31",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (5, 6), (5, 7), (5, 8), (5, 9), (6, 7), (6, 8), (6, 9), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-32",
        vertex_count: 9,
        edges: &[(1, 2), (1, 6), (1, 8), (2, 3), (2, 9), (3, 4), (3, 7), (4, 5), (4, 8), (5, 6), (5, 9), (6, 7), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-33",
        vertex_count: 9,
        edges: &[(1, 2), (1, 8), (1, 9), (2, 3), (2, 6), (2, 9), (3, 4), (3, 7), (3, 9), (4, 5), (5, 6), (6, 7), (6, 9), (7, 8)],
    },
    Fixture {
        label: "cm36-34",
        vertex_count: 9,
        edges: &[(1, 2), (1, 9), (2, 3), (3, 4), (3, 5), (3, 8), (4, 5), (4, 8), (4, 9), (5, 6), (5, 9), (6, 7), (7, 8), (8, 9)],
    },
    Fixture {
        label: "cm36-35",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 7), (1, 8), (1, 9), (2, 3), (2, 7), (2, 8), (2, 9), (3, 4), (3, 5), (3, 8), (3, 9), (4, 5), (4, 6), (5, 6), (6, 7), (7, 8), (7, 9), (8, 9)],
    },
    Fixture {
        label: "cm36-36",
        vertex_count: 9,
        edges: &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 8), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 8), (7, 9), (8, 9)],
    },
];

/// An 11-vertex W2, edge-critical graph that is CM over ℚ, whose
/// regularity depends on the characteristic.
pub const EXAMPLE_11: Fixture = Fixture {
    label: "example-11",
    vertex_count: 11,
    edges: &[
        (1, 3), (1, 4), (1, 7), (1, 10), (1, 11), (2, 4), (2, 5), (2, 8), (2, 10), (2, 11), (3, 5), (3, 6), (3, 8),
        (3, 11), (4, 6), (4, 9), (4, 11), (5, 7), (5, 9), (5, 11), (6, 8), (6, 9), (7, 9), (7, 10), (8, 10),
    ],
};

/// A 9-vertex graph with `v = reg = β0 = 3` and a CM symbolic square.
pub const EXAMPLE_9: Fixture = Fixture {
    label: "example-9",
    vertex_count: 9,
    edges: &[
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 8), (2, 9), (3, 7), (4, 8), (5, 9), (6, 7), (7, 8),
        (7, 9), (8, 9),
    ],
};

/// Every embedded fixture, looked up by label.
pub fn by_label(label: &str) -> Option<Fixture> {
    CM36.iter().chain([&EXAMPLE_11, &EXAMPLE_9]).find(|f| f.label == label).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_is_nineteen_and_seventeen() {
        let small = CM36.iter().filter(|f| f.vertex_count < 9).count();
        let nine = CM36.iter().filter(|f| f.vertex_count == 9).count();
        assert_eq!((small, nine), (19, 17));
    }

    #[test]
    fn fixtures_are_connected_simple_graphs() {
        for f in CM36.iter().chain([&EXAMPLE_11, &EXAMPLE_9]) {
            let g = f.graph().unwrap();
            assert!(g.is_connected(), "{}", f.label);
            assert_eq!(g.edge_count(), f.edges.len(), "{}", f.label);
        }
    }

    #[test]
    fn vertex_and_edge_counts_per_row() {
        let vertices: Vec<usize> = CM36.iter().map(|f| f.vertex_count).collect();
        let mut expected = vec![2, 3, 4, 5, 5, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8, 8, 8];
        expected.extend([9; 17]);
        assert_eq!(vertices, expected);
        let edges: Vec<usize> = CM36.iter().map(|f| f.edges.len()).collect();
        assert_eq!(
            edges,
            [
                1, 3, 6, 5, 10, 8, 15, 11, 12, 12, 21, 16, 15, 15, 16, 17, 17, 10, 28, 20, 19, 20, 23, 23, 21, 22, 22,
                13, 19, 21, 36, 15, 14, 14, 20, 23
            ]
        );
    }

    #[test]
    fn nine_vertex_example_is_a_table_row() {
        let mut a = EXAMPLE_9.graph().unwrap().edge_pairs();
        let mut b = CM36[31].graph().unwrap().edge_pairs();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        assert_eq!(by_label("cm36-32"), Some(CM36[31]));
        assert_eq!(by_label("nope"), None);
    }
}
