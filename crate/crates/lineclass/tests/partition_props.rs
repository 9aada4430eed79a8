//! Properties of partition descriptions beyond the acceptance gate: noncut
//! bookkeeping, complement-vs-pointwise agreement, and the worked transform
//! examples.

mod common;

use lineclass::cardinal::Cardinal;
use lineclass::interval::{rat, rat_int, Interval};
use lineclass::partition::{Block, PartitionDesc, PartitionError, TypeQuadruple};

fn iv(s: &str) -> Interval {
    s.parse().unwrap()
}

fn t(s: &str) -> TypeQuadruple {
    s.parse().unwrap()
}

/// Total noncut points over all members (fill singletons included) equals
/// α + 2β + γ of the computed type.
#[test]
fn noncut_totals_match_the_type() {
    let mut rng = common::rng(0x5eed_1001);
    for _ in 0..200 {
        let desc = common::random_desc(&mut rng);
        let mut total = Cardinal::zero();
        for b in &desc.blocks {
            let contribution = match b {
                Block::Single(i) => Cardinal::fin(i.noncut_count() as u64),
                Block::Arith { proto, count, .. } => {
                    Cardinal::fin(proto.noncut_count() as u64).mul(count)
                }
                // every half-open member of a cell has one noncut point
                Block::HarmonicFill { count, .. } => Cardinal::Aleph0.mul(count),
            };
            total = total.add(&contribution);
        }
        total = total.add(&desc.complement_components().unwrap().fill_cardinal());
        let ty = desc.compute_type().unwrap();
        let expected = ty.alpha.add(&ty.beta).add(&ty.beta).add(&ty.gamma);
        assert_eq!(total, expected, "noncut total mismatch for type {ty}");
    }
}

/// The symbolic complement agrees with brute-force pointwise coverage on the
/// 1/24 grid over [-20, 20].
#[test]
fn complement_agrees_with_pointwise_sweep() {
    let mut rng = common::rng(0x5eed_1002);
    for _ in 0..100 {
        let desc = common::random_desc(&mut rng);
        let comp = desc.complement_components().unwrap();
        let comps = comp.components_within(&rat_int(-20), &rat_int(20));
        for q in -480..=480 {
            let p = rat(q, 24);
            let in_complement = comps.iter().any(|c| c.contains(&p));
            assert_eq!(
                in_complement,
                !desc.covers(&p),
                "complement and coverage disagree at {p}:\n{}",
                desc.to_json()
            );
        }
    }
}

#[test]
fn strip_examples() {
    // (1,1,0,3): {0}, [1,2] and three explicit opens
    let desc = PartitionDesc::new(vec![
        Block::Single(iv("[0,0]")),
        Block::Single(iv("[1,2]")),
        Block::Single(iv("]-inf,0[")),
        Block::Single(iv("]0,1[")),
        Block::Single(iv("]2,+inf[")),
    ]);
    assert_eq!(desc.compute_type().unwrap(), t("(1,1,0,3)"));
    let stripped = desc.apply_84().unwrap();
    assert_eq!(stripped.compute_type().unwrap(), t("(3,0,0,4)"));

    // open intervals have no noncut points: the Euclidean line is fixed
    let line = PartitionDesc::new(vec![Block::Single(Interval::line())]);
    let stripped = line.apply_84().unwrap();
    assert_eq!(stripped.compute_type().unwrap(), t("(0,0,0,1)"));
    assert_eq!(stripped.blocks, line.blocks);

    // the six-spaced uncountable layout: alpha stays continuum
    let q2 = PartitionDesc::new(vec![
        Block::Single(iv("[0,1]")),
        Block::Single(iv("[2,3[")),
        Block::Single(iv("]4,5[")),
    ]);
    assert_eq!(
        q2.apply_84().unwrap().compute_type().unwrap(),
        t("(continuum,0,0,3)")
    );
}

#[test]
fn strip_rebuilds_when_harmonic_blocks_are_present() {
    let desc = PartitionDesc::new(vec![
        Block::Single(iv("[0,0]")),
        Block::HarmonicFill {
            anchor: rat_int(0),
            length: rat_int(1),
            side: lineclass::partition::Side::AccumulateLeft,
            stride: rat_int(0),
            count: Cardinal::one(),
        },
        Block::Single(iv("[1,1]")),
        Block::Single(iv("]-inf,0[")),
        Block::Single(iv("]1,+inf[")),
    ]);
    let ty = desc.compute_type().unwrap();
    assert_eq!(ty, t("(2,0,aleph0,2)"));
    let stripped = desc.apply_84().unwrap();
    assert!(stripped.validate().is_empty());
    assert_eq!(stripped.compute_type().unwrap(), t("(aleph0,0,0,aleph0)"));
}

#[test]
fn carve_examples_from_the_line() {
    let line = PartitionDesc::new(vec![Block::Single(Interval::line())]);
    assert_eq!(line.compute_type().unwrap(), t("(0,0,0,1)"));

    let carved = line.apply_83(Cardinal::fin(2), Cardinal::fin(1)).unwrap();
    assert!(carved.validate().is_empty());
    assert_eq!(carved.compute_type().unwrap(), t("(0,0,2,1)"));

    let tiled = line.apply_83(Cardinal::Aleph0, Cardinal::zero()).unwrap();
    assert!(tiled.validate().is_empty());
    assert_eq!(tiled.compute_type().unwrap(), t("(0,0,aleph0,0)"));

    // gamma' finite with delta' < delta fails both side conditions
    assert!(matches!(
        line.apply_83(Cardinal::fin(1), Cardinal::zero()),
        Err(PartitionError::BadCarveTarget { .. })
    ));
}

#[test]
fn carving_an_uncovered_component_preserves_the_fill() {
    // six-spaced sparse layout: carving happens inside uncovered territory
    let q2 = PartitionDesc::new(vec![
        Block::Single(iv("[0,1]")),
        Block::Single(iv("[2,3[")),
        Block::Single(iv("]4,5[")),
    ]);
    let carved = q2.apply_83(Cardinal::fin(4), Cardinal::fin(1)).unwrap();
    assert!(carved.validate().is_empty());
    assert_eq!(carved.compute_type().unwrap(), t("(continuum,1,4,1)"));

    let tiled = q2.apply_83(Cardinal::Aleph0, Cardinal::zero()).unwrap();
    assert_eq!(tiled.compute_type().unwrap(), t("(continuum,1,aleph0,0)"));
}

#[test]
fn validation_reports_the_offending_pair_and_witness() {
    let desc = PartitionDesc::new(vec![
        Block::Single(iv("[0,2]")),
        Block::Single(iv("[5,6]")),
        Block::Arith {
            proto: iv("[1,3/2]"),
            stride: rat_int(4),
            count: Cardinal::fin(2),
        },
    ]);
    let violations = desc.validate();
    assert!(!violations.is_empty());
    match &violations[0] {
        lineclass::partition::Violation::Overlap {
            block_a,
            block_b,
            witness,
            ..
        } => {
            assert_eq!((*block_a, *block_b), (0, 2));
            assert!(iv("[1,3/2]").contains(witness));
        }
        other => panic!("expected an overlap, got {other}"),
    }
    // second member [5,11/2] also collides with [5,6]
    assert!(violations.len() >= 2);
}
