//! Doubled affine Dynkin diagrams with their marks (the null vector of the
//! affine Cartan matrix normalized to 1 at the extending node).

/// Adjacency matrix and marks.
pub type Diagram = (Vec<Vec<u32>>, Vec<u32>);

fn from_edges(k: usize, edges: &[(usize, usize)], marks: Vec<u32>) -> Diagram {
    let mut a = vec![vec![0u32; k]; k];
    for &(i, j) in edges {
        a[i][j] += 1;
        a[j][i] += 1;
    }
    (a, marks)
}

/// `Ã_n`: a cycle on `n + 1` vertices; `Ã_1` is a double edge.
pub fn affine_a(n: usize) -> Diagram {
    let k = n + 1;
    assert!(k >= 2, "Ã_n needs n ≥ 1");
    let edges: Vec<(usize, usize)> = if k == 2 {
        vec![(0, 1), (0, 1)]
    } else {
        (0..k).map(|i| (i, (i + 1) % k)).collect()
    };
    from_edges(k, &edges, vec![1; k])
}

/// `D̃_n` for `n ≥ 4`: a path `c_1 … c_{n-3}` with two leaves at each end.
pub fn affine_d(n: usize) -> Diagram {
    assert!(n >= 4, "D̃_n needs n ≥ 4");
    let path = n - 3;
    // leaves 0..4, path vertices 4..4+path
    let k = n + 1;
    let c = |t: usize| 4 + t;
    let mut edges = vec![(0, c(0)), (1, c(0)), (2, c(path - 1)), (3, c(path - 1))];
    edges.extend((0..path - 1).map(|t| (c(t), c(t + 1))));
    let mut marks = vec![1; 4];
    marks.extend(std::iter::repeat_n(2, path));
    from_edges(k, &edges, marks)
}

/// A star with the given arm lengths; `marks[0]` is the center.
fn star(arms: &[usize], marks: Vec<u32>) -> Diagram {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    from_edges(next, &edges, marks)
}

pub fn affine_e6() -> Diagram {
    star(&[2, 2, 2], vec![3, 2, 1, 2, 1, 2, 1])
}

pub fn affine_e7() -> Diagram {
    star(&[3, 3, 1], vec![4, 3, 2, 1, 3, 2, 1, 2])
}

pub fn affine_e8() -> Diagram {
    star(&[5, 2, 1], vec![6, 5, 4, 3, 2, 1, 4, 2, 3])
}
