//! Run the classifier across the trichotomy: triangle unions, unions of
//! completes, padded catalog members, and out-of-scope graphs.
//!
//! ```sh
//! cargo run --release --example classify_graphs
//! ```

use speccat::classify::{classify, degree_certificates, psd_rank2_check};
use speccat::families::{build_family, FamilyDescriptor};
use speccat::graph::Graph;

fn show(name: &str, g: &Graph) {
    let verdict = classify(g);
    println!("{name:<24} {}", verdict.to_json());
}

fn main() {
    show("7K3", &Graph::triangle().pad_with_triangles(6));
    show("K6 + 2K3", &Graph::complete(6).pad_with_triangles(2));
    show(
        "K4 + K5 + K3",
        &Graph::complete(4)
            .disjoint_union(&Graph::complete(5))
            .pad_with_triangles(1),
    );
    let member: FamilyDescriptor = "I(a=3,k=4)".parse().unwrap();
    show(
        "I(3,4) + 2K3",
        &build_family(&member).unwrap().pad_with_triangles(2),
    );
    show("C5", &Graph::cycle(5));
    show("P4", &Graph::path(4));

    // the fast necessary-condition certificates
    let g = build_family(&member).unwrap();
    println!(
        "\nI(3,4): degree certificates {:?}, psd rank-2 check {}",
        degree_certificates(&g),
        psd_rank2_check(&g)
    );
    println!(
        "C5:     degree certificates {:?}, psd rank-2 check {}",
        degree_certificates(&Graph::cycle(5)).len(),
        psd_rank2_check(&Graph::cycle(5))
    );
}
