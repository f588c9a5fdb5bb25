use braidlift_core::coloring_lift::enumerate_colorings;
use braidlift_core::link_model::{pretzel_diagram, wirtinger, PretzelForm};
use std::time::Instant;

fn main() {
    let q: Vec<i64> = std::env::args().nth(1).unwrap().split(',').map(|s| s.parse().unwrap()).collect();
    let t = Instant::now();
    let d = pretzel_diagram(&PretzelForm::new(q.clone()).unwrap()).unwrap();
    println!("diagram: {:?} crossings={}", t.elapsed(), d.crossings().len());
    let t = Instant::now();
    let pres = wirtinger(&d).unwrap();
    println!("wirtinger: {:?} strands={} relations={}", t.elapsed(), pres.generator_count, pres.relations.len());
    let t = Instant::now();
    let cols = enumerate_colorings(&d, 3, true).unwrap();
    println!("colorings: {:?} count={}", t.elapsed(), cols.len());
}
