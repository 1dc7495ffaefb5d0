//! Fixture graphs shared by the benchmarks in `benches/`.

use thetabar::Graph;

/// Complete multipartite graphs with three and four parts, largest last.
pub fn multipartite_fixtures() -> Vec<(String, Graph)> {
    [&[3, 4, 5][..], &[6, 8, 10], &[2, 3, 4, 5], &[5, 6, 7, 8]]
        .into_iter()
        .map(|parts| {
            let name = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            (format!("K{{{name}}}"), Graph::complete_multipartite(parts).unwrap())
        })
        .collect()
}

/// Hosts without multipartite structure: a rook graph, a cycle and a path.
pub fn general_fixtures() -> Vec<(String, Graph)> {
    vec![
        ("K4xK4".into(), Graph::cartesian_product(&Graph::complete(4), &Graph::complete(4))),
        ("C24".into(), Graph::cycle(24).unwrap()),
        ("P24".into(), Graph::path(24)),
    ]
}
