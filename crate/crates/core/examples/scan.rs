use braidlift_core::coloring_lift::{b3_lift_search, enumerate_colorings};
use braidlift_core::link_model::{pretzel_diagram, PretzelForm};
use braidlift_core::verdict::LiftVerdict;
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let bound: u64 = args[1].parse().unwrap();
    let q: Vec<i64> = args[2].split(',').map(|s| s.parse().unwrap()).collect();
    let d = pretzel_diagram(&PretzelForm::new(q.clone()).unwrap()).unwrap();
    let cols = enumerate_colorings(&d, 3, true).unwrap();
    let nc: Vec<_> = cols.into_iter().filter(|c| !c.is_constant()).collect();
    if nc.is_empty() {
        println!("{q:?}: not tricolorable");
        return;
    }
    let (mut lift, mut unknown) = (0, 0);
    let t = Instant::now();
    for c in &nc {
        match b3_lift_search(&d, c, bound).unwrap() {
            LiftVerdict::Liftable { .. } => lift += 1,
            LiftVerdict::UnknownWithinBound { .. } => unknown += 1,
            LiftVerdict::NotLiftable { .. } => unreachable!(),
        }
    }
    println!("{q:?}: {} nonconstant, {lift} liftable, {unknown} unknown (bound {bound}, {:?})", nc.len(), t.elapsed());
}
