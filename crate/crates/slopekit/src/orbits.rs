//! Reeb-orbit bookkeeping near a mixed torus: homology classes,
//! Conley-Zehnder indices, actions, and the combinatorial feasibility of
//! holomorphic-building degenerations.
//!
//! The default table lists the short orbits of the standard mixed-torus
//! neighborhood. The two dividing curves of the middle torus are the
//! elliptic orbits `e1`, `e2`; each of the two bypass layers contributes
//! a genus-two interface with a large elliptic orbit pair (`e3`, `e4`
//! below, `e6`, `e7` above), boundary elliptic orbits (`e5`, `e8`), and
//! canceling hyperbolic orbits (`h2`, `h5` below, `h2p`, `h8` above).
//! Elliptic orbits have Conley-Zehnder index 1 and hyperbolic ones index
//! 0, measured against the framing of the surface containing them.
//!
//! A building with total homology `t` can only break through orbit
//! multisets of the same total class and strictly smaller total action;
//! [`feasible_buildings`] enumerates these necessary conditions
//! exhaustively, and [`breaking_scan`] applies them to every way of
//! splitting a set of positive ends. Feasibility here does not assert
//! that a holomorphic building exists; infeasibility rules one out.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::slope::Vec2;

/// An exact positive rational action.
pub type Action = Ratio<i64>;

pub fn parse_action(text: &str) -> Result<Action> {
    let err = || Error::ParseError {
        input: text.to_string(),
        expected: "a rational action \"p/q\" or an integer",
    };
    let t = text.trim();
    if let Some((ps, qs)) = t.split_once('/') {
        let p = ps.trim().parse::<i64>().map_err(|_| err())?;
        let q = qs.trim().parse::<i64>().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        Ok(Ratio::new(p, q))
    } else {
        let p = t.parse::<i64>().map_err(|_| err())?;
        Ok(Ratio::from_integer(p))
    }
}

pub fn format_action(a: &Action) -> String {
    if *a.denom() == 1 {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// One Reeb orbit: a name, a homology class in `Z^2` (not necessarily
/// primitive), a Conley-Zehnder index, and a positive rational action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub name: String,
    pub homology: Vec2,
    pub cz_index: i64,
    action: Action,
}

impl OrbitDatum {
    pub fn new(name: &str, homology: Vec2, cz_index: i64, action: Action) -> Result<OrbitDatum> {
        if action <= Action::from_integer(0) {
            return Err(Error::NonPositiveAction(format_action(&action)));
        }
        Ok(OrbitDatum {
            name: name.to_string(),
            homology,
            cz_index,
            action,
        })
    }

    pub fn action(&self) -> Action {
        self.action
    }
}

/// A strict inequality between two sums of orbit actions:
/// `sum(smaller) < sum(larger)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionConstraint {
    pub smaller: Vec<String>,
    pub larger: Vec<String>,
}

impl fmt::Display for ActionConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "constraint {} < {}",
            self.smaller.join("+"),
            self.larger.join("+")
        )
    }
}

/// A table of orbits together with the strict action-order constraints
/// its stored actions are required to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    orbits: Vec<OrbitDatum>,
    constraints: Vec<ActionConstraint>,
}

impl OrbitTable {
    pub fn new(orbits: Vec<OrbitDatum>, constraints: Vec<ActionConstraint>) -> Result<OrbitTable> {
        let table = OrbitTable {
            orbits,
            constraints,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        for (i, o) in self.orbits.iter().enumerate() {
            if self.orbits[..i].iter().any(|p| p.name == o.name) {
                return Err(Error::DuplicateOrbit(o.name.clone()));
            }
        }
        for c in &self.constraints {
            let lhs = self.action_sum(&c.smaller)?;
            let rhs = self.action_sum(&c.larger)?;
            if lhs >= rhs {
                return Err(Error::InconsistentTable(c.to_string()));
            }
        }
        Ok(())
    }

    pub fn orbits(&self) -> &[OrbitDatum] {
        &self.orbits
    }

    pub fn constraints(&self) -> &[ActionConstraint] {
        &self.constraints
    }

    pub fn get(&self, name: &str) -> Result<&OrbitDatum> {
        self.orbits
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| Error::UnknownOrbit(name.to_string()))
    }

    /// Adds an orbit, e.g. one of the remaining orbits of the
    /// neighborhood with a chosen (large) action, and re-validates.
    pub fn add_orbit(&mut self, orbit: OrbitDatum) -> Result<()> {
        self.orbits.push(orbit);
        match self.validate() {
            Ok(()) => Ok(()),
            Err(e) => {
                self.orbits.pop();
                Err(e)
            }
        }
    }

    fn action_sum(&self, names: &[String]) -> Result<Action> {
        let mut sum = Action::from_integer(0);
        for n in names {
            sum += self.get(n)?.action();
        }
        Ok(sum)
    }
}

impl fmt::Display for OrbitTable {
    /// Line format: `name x y cz action`, then `constraint lhs < rhs`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.orbits {
            writeln!(
                f,
                "{} {} {} {} {}",
                o.name,
                o.homology.x,
                o.homology.y,
                o.cz_index,
                format_action(&o.action)
            )?;
        }
        for c in &self.constraints {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for OrbitTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<OrbitTable> {
        let mut orbits = Vec::new();
        let mut constraints = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = || Error::ParseError {
                input: line.to_string(),
                expected: "\"name x y cz action\" or \"constraint lhs < rhs\"",
            };
            if let Some(rest) = line.strip_prefix("constraint ") {
                let (lhs, rhs) = rest.split_once('<').ok_or_else(err)?;
                let split = |side: &str| -> Vec<String> {
                    side.split('+')
                        .map(|t| t.trim().to_string())
                        .filter(|t| !t.is_empty())
                        .collect()
                };
                constraints.push(ActionConstraint {
                    smaller: split(lhs),
                    larger: split(rhs),
                });
            } else {
                let fields: Vec<&str> = line.split_whitespace().collect();
                if fields.len() != 5 {
                    return Err(err());
                }
                let x = fields[1].parse::<i64>().map_err(|_| err())?;
                let y = fields[2].parse::<i64>().map_err(|_| err())?;
                let cz = fields[3].parse::<i64>().map_err(|_| err())?;
                let action = parse_action(fields[4])?;
                orbits.push(OrbitDatum::new(fields[0], Vec2::new(x, y), cz, action)?);
            }
        }
        OrbitTable::new(orbits, constraints)
    }
}

/// The orbit table of the standard mixed-torus neighborhood.
///
/// Homology classes use the identification `H_1(T^2 x I) = Z^2`:
/// `[e1] = (0,-1)`, `[e2] = [h2] = [h2p] = (0,1)`, `[e3] = (-1,0)`,
/// `[e4] = [e5] = [h5] = (1,1)`, with the upper layer repeating the
/// pattern of the lower one (`[e7] = [e3]` and so on). Orbits of
/// arbitrarily large action are left out; use [`OrbitTable::add_orbit`]
/// to inject one with a chosen action.
///
/// The stored actions are the smallest-denominator rationals satisfying
/// the order constraints; only constraint-implied facts are meaningful.
pub fn default_mixed_torus_table() -> OrbitTable {
    let half = Ratio::new(1, 2);
    let one = Ratio::from_integer(1);
    let two = Ratio::from_integer(2);
    let orbit = |name, x, y, cz, action| OrbitDatum::new(name, Vec2::new(x, y), cz, action);
    let orbits = vec![
        orbit("e1", 0, -1, 1, one).unwrap(),
        orbit("e2", 0, 1, 1, one).unwrap(),
        orbit("e3", -1, 0, 1, two).unwrap(),
        orbit("e4", 1, 1, 1, two).unwrap(),
        orbit("e5", 1, 1, 1, one).unwrap(),
        orbit("h2", 0, 1, 0, half).unwrap(),
        orbit("h2p", 0, 1, 0, half).unwrap(),
        orbit("h5", 1, 1, 0, half).unwrap(),
        orbit("e6", 1, 1, 1, two).unwrap(),
        orbit("e7", -1, 0, 1, two).unwrap(),
        orbit("e8", 1, 1, 1, one).unwrap(),
        orbit("h8", 1, 1, 0, half).unwrap(),
    ];

    let mut constraints = Vec::new();
    let pair = |small: &str, large: &str| ActionConstraint {
        smaller: vec![small.to_string()],
        larger: vec![large.to_string()],
    };
    // The two interface orbits of each layer outlast everything short.
    for large in ["e3", "e4"] {
        for small in ["e1", "e2", "h2", "h5"] {
            constraints.push(pair(small, large));
        }
    }
    for large in ["e6", "e7"] {
        for small in ["e1", "e2", "h2p", "h8"] {
            constraints.push(pair(small, large));
        }
    }
    // Each hyperbolic orbit is shorter than the elliptic orbit it cancels.
    constraints.push(pair("h2", "e2"));
    constraints.push(pair("h2p", "e2"));
    constraints.push(pair("h5", "e5"));
    constraints.push(pair("h8", "e8"));
    // The breaking obstruction used over and over downstream.
    constraints.push(ActionConstraint {
        smaller: vec!["h2".into()],
        larger: vec!["e3".into(), "e4".into()],
    });
    constraints.push(ActionConstraint {
        smaller: vec!["h2p".into()],
        larger: vec!["e6".into(), "e7".into()],
    });

    OrbitTable::new(orbits, constraints).expect("default table satisfies its constraints")
}

/// A finite multiset of orbit names.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Building {
    counts: BTreeMap<String, u32>,
}

impl Building {
    pub fn empty() -> Building {
        Building::default()
    }

    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Building {
        let mut b = Building::empty();
        for n in names {
            b.push(n);
        }
        b
    }

    pub fn push(&mut self, name: &str) {
        *self.counts.entry(name.to_string()).or_insert(0) += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts(&self) -> &BTreeMap<String, u32> {
        &self.counts
    }

    pub fn total_homology(&self, table: &OrbitTable) -> Result<Vec2> {
        let mut sum = Vec2::ZERO;
        for (name, &k) in &self.counts {
            sum = sum + (k as i64) * table.get(name)?.homology;
        }
        Ok(sum)
    }

    pub fn total_action(&self, table: &OrbitTable) -> Result<Action> {
        let mut sum = Action::from_integer(0);
        for (name, &k) in &self.counts {
            sum += table.get(name)?.action() * Action::from_integer(k as i64);
        }
        Ok(sum)
    }
}

impl fmt::Display for Building {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        for (name, &k) in &self.counts {
            if !first {
                f.write_str("+")?;
            }
            if k > 1 {
                write!(f, "{k}*{name}")?;
            } else {
                f.write_str(name)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// All multisets from `pool` whose homology classes sum to `target` and
/// whose actions sum to strictly less than `budget`. The positive
/// actions bound every multiplicity, so the enumeration is exhaustive
/// and terminates; the output order is deterministic (lexicographic in
/// the table order of the pool).
pub fn feasible_buildings(
    target: Vec2,
    budget: Action,
    pool: &[&str],
    table: &OrbitTable,
) -> Result<Vec<Building>> {
    let mut ordered: Vec<&OrbitDatum> = Vec::new();
    for name in pool {
        let datum = table.get(name)?;
        if datum.action() <= Action::from_integer(0) {
            return Err(Error::UnboundedSearch(datum.name.clone()));
        }
        if !ordered.iter().any(|o| o.name == datum.name) {
            ordered.push(datum);
        }
    }
    // Canonical order: as listed in the table, so the result does not
    // depend on how the caller ordered the pool.
    ordered.sort_by_key(|o| {
        table
            .orbits()
            .iter()
            .position(|p| p.name == o.name)
            .expect("pool orbits come from the table")
    });

    let mut out = Vec::new();
    let mut stack: Vec<u32> = Vec::new();
    search(
        &ordered,
        0,
        Vec2::ZERO,
        Action::from_integer(0),
        target,
        budget,
        &mut stack,
        &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    pool: &[&OrbitDatum],
    index: usize,
    homology: Vec2,
    action: Action,
    target: Vec2,
    budget: Action,
    stack: &mut Vec<u32>,
    out: &mut Vec<Building>,
) {
    if index == pool.len() {
        if homology == target {
            let mut b = Building::empty();
            for (o, &k) in pool.iter().zip(stack.iter()) {
                for _ in 0..k {
                    b.push(&o.name);
                }
            }
            out.push(b);
        }
        return;
    }
    let orbit = pool[index];
    let mut k = 0u32;
    let mut acc_h = homology;
    let mut acc_a = action;
    loop {
        if acc_a >= budget {
            break;
        }
        stack.push(k);
        search(pool, index + 1, acc_h, acc_a, target, budget, stack, out);
        stack.pop();
        k += 1;
        acc_h = acc_h + orbit.homology;
        acc_a += orbit.action();
    }
}

/// First Chern number from the index identity
/// `2 c1 = ind - sum of Conley-Zehnder indices`.
pub fn chern_from_index(ind: i64, cz_sum: i64) -> Result<i64> {
    let diff = ind - cz_sum;
    if diff.rem_euclid(2) != 0 {
        return Err(Error::ParityViolation(ind, cz_sum));
    }
    Ok(diff / 2)
}

/// One way a set of positive ends can degenerate: the broken ends and
/// the intermediate orbits replacing them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BreakingCandidate {
    pub broken: Building,
    pub intermediates: Building,
}

/// The outcome of [`breaking_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BreakingReport {
    pub ends: Building,
    pub survivors: Vec<BreakingCandidate>,
}

impl BreakingReport {
    /// A scan of no ends checks nothing.
    pub fn is_trivial(&self) -> bool {
        self.ends.is_empty()
    }
}

/// Scans every nonempty sub-multiset `B` of the positive ends for
/// two-level degenerations: the broken ends `B` are replaced by a
/// nonempty multiset of intermediate orbits with equal total homology
/// and strictly smaller total action, while the remaining ends pass
/// through untouched. Intermediates are drawn from `pool` (default: the
/// whole table) minus the end orbits themselves, since re-listing an end
/// as an intermediate is the same building with a trivial cylinder.
pub fn breaking_scan(
    table: &OrbitTable,
    ends: &Building,
    pool: Option<&[&str]>,
) -> Result<BreakingReport> {
    for name in ends.counts().keys() {
        table.get(name)?;
    }
    let all_names: Vec<&str> = table.orbits().iter().map(|o| o.name.as_str()).collect();
    let pool: Vec<&str> = pool
        .unwrap_or(&all_names)
        .iter()
        .copied()
        .filter(|n| !ends.counts().contains_key(*n))
        .collect();
    for name in &pool {
        table.get(name)?;
    }

    let end_names: Vec<&String> = ends.counts().keys().collect();
    let end_mults: Vec<u32> = ends.counts().values().copied().collect();
    let mut survivors = Vec::new();

    // Walk the product of (0..=multiplicity) choices per end name.
    let mut choice = vec![0u32; end_names.len()];
    loop {
        if choice.iter().any(|&c| c > 0) {
            let mut broken = Building::empty();
            for (name, &c) in end_names.iter().zip(choice.iter()) {
                for _ in 0..c {
                    broken.push(name);
                }
            }
            let target = broken.total_homology(table)?;
            let budget = broken.total_action(table)?;
            for intermediates in feasible_buildings(target, budget, &pool, table)? {
                if !intermediates.is_empty() {
                    survivors.push(BreakingCandidate {
                        broken: broken.clone(),
                        intermediates,
                    });
                }
            }
        }
        // Next choice vector, odometer style.
        let mut i = 0;
        loop {
            if i == choice.len() {
                survivors.sort();
                return Ok(BreakingReport {
                    ends: ends.clone(),
                    survivors,
                });
            }
            if choice[i] < end_mults[i] {
                choice[i] += 1;
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> OrbitTable {
        default_mixed_torus_table()
    }

    #[test]
    fn default_table_fixtures() {
        let t = table();
        assert_eq!(t.get("e1").unwrap().homology, Vec2::new(0, -1));
        assert_eq!(t.get("e2").unwrap().homology, Vec2::new(0, 1));
        assert_eq!(t.get("e3").unwrap().homology, Vec2::new(-1, 0));
        assert_eq!(t.get("e4").unwrap().homology, Vec2::new(1, 1));
        assert_eq!(t.get("h2").unwrap().cz_index, 0);
        assert_eq!(t.get("e1").unwrap().cz_index, 1);
        // The called-out order fact: A(h2) < A(e3) + A(e4).
        let lhs = t.get("h2").unwrap().action();
        let rhs = t.get("e3").unwrap().action() + t.get("e4").unwrap().action();
        assert!(lhs < rhs);
    }

    #[test]
    fn table_round_trips_through_text() {
        let t = table();
        let text = t.to_string();
        let back: OrbitTable = text.parse().unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn inconsistent_tables_are_rejected() {
        let orbits = vec![
            OrbitDatum::new("a", Vec2::new(0, 1), 1, Action::from_integer(2)).unwrap(),
            OrbitDatum::new("b", Vec2::new(0, 1), 1, Action::from_integer(1)).unwrap(),
        ];
        let constraints = vec![ActionConstraint {
            smaller: vec!["a".into()],
            larger: vec!["b".into()],
        }];
        assert!(matches!(
            OrbitTable::new(orbits, constraints),
            Err(Error::InconsistentTable(_))
        ));
    }

    #[test]
    fn no_combination_reaches_e1() {
        let t = table();
        let target = t.get("e1").unwrap().homology;
        let budget = t.get("e1").unwrap().action();
        let found = feasible_buildings(target, budget, &["e3", "e4", "h5", "e5"], &t).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn h2_splits_only_homologically() {
        let t = table();
        let target = t.get("h2").unwrap().homology;

        // With a generous budget the unique homology solution shows up.
        let big = Action::from_integer(100);
        let found = feasible_buildings(target, big, &["e3", "e4"], &t).unwrap();
        assert_eq!(found, vec![Building::from_names(["e3", "e4"])]);

        // The action filter removes it: A(h2) < A(e3) + A(e4).
        let budget = t.get("h2").unwrap().action();
        let found = feasible_buildings(target, budget, &["e3", "e4"], &t).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn zero_target_has_the_empty_building() {
        let t = table();
        let found = feasible_buildings(
            Vec2::ZERO,
            Action::from_integer(1),
            &["e3", "e4", "h5", "e5"],
            &t,
        )
        .unwrap();
        assert_eq!(found, vec![Building::empty()]);
    }

    #[test]
    fn unknown_pool_orbits_are_rejected() {
        let t = table();
        assert_eq!(
            feasible_buildings(Vec2::ZERO, Action::from_integer(1), &["nope"], &t),
            Err(Error::UnknownOrbit("nope".into()))
        );
    }

    #[test]
    fn chern_numbers() {
        assert_eq!(chern_from_index(1, 1).unwrap(), 0);
        assert_eq!(chern_from_index(2, 2).unwrap(), 0);
        assert_eq!(chern_from_index(0, 0).unwrap(), 0);
        assert_eq!(chern_from_index(3, 1).unwrap(), 1);
        assert_eq!(chern_from_index(2, 1), Err(Error::ParityViolation(2, 1)));
    }

    #[test]
    fn scan_of_the_dividing_orbits_breaks_through_h2_and_h2p() {
        let t = table();
        let ends = Building::from_names(["e1", "e2"]);
        let report = breaking_scan(&t, &ends, None).unwrap();
        let survivors: Vec<String> = report
            .survivors
            .iter()
            .map(|c| format!("{}=>{}", c.broken, c.intermediates))
            .collect();
        assert_eq!(survivors, vec!["e2=>h2", "e2=>h2p"]);
    }

    #[test]
    fn scan_into_the_far_layer_finds_nothing() {
        let t = table();
        let ends = Building::from_names(["e1", "h2"]);
        let report = breaking_scan(&t, &ends, Some(&["e3", "e4", "h5", "e5"])).unwrap();
        assert!(report.survivors.is_empty());
    }

    #[test]
    fn empty_scan_is_trivial() {
        let t = table();
        let report = breaking_scan(&t, &Building::empty(), None).unwrap();
        assert!(report.is_trivial());
        assert!(report.survivors.is_empty());
    }

    #[test]
    fn injected_orbits_must_respect_constraints() {
        let mut t = table();
        let big = OrbitDatum::new("x9", Vec2::new(2, 3), 1, Action::from_integer(50)).unwrap();
        t.add_orbit(big).unwrap();
        assert!(t.get("x9").is_ok());

        let dup = OrbitDatum::new("e1", Vec2::ZERO, 1, Action::from_integer(1)).unwrap();
        assert_eq!(t.add_orbit(dup), Err(Error::DuplicateOrbit("e1".into())));
    }
}
