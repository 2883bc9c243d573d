//! Golden fixture values: every concrete number the toolkit is expected
//! to reproduce, regenerated from the library and diffed against the
//! stored file.

use std::path::{Path, PathBuf};

use serde_json::json;

use slopekit::orbits::{format_action, Building};
use slopekit::splitting::SplitStatus;
use slopekit::surgery::SideStatus;
use slopekit::{
    arc_measure_vs_pi, breaking_scan, check_split_slope, classify_meridian, chern_from_index,
    count_tight_solid_torus, default_mixed_torus_table, farey_adjacent, feasible_buildings,
    is_mixed_torus, is_universally_tight, relative_euler_class, slice_euler_contribution,
    splitting_slopes, surgery_gluing_map, surgery_slope_table, BasicSlice, Direction, Error, Sign,
    SlicePath, Slope, SplitSpec,
};

use crate::Rendered;

pub const GOLDEN_FILE: &str = "golden_values.txt";
pub const DIR_ENV: &str = "SLOPEKIT_FIXTURE_DIR";

fn slope(text: &str) -> Slope {
    text.parse().expect("fixture slopes are well formed")
}

fn slice_path(text: &str) -> SlicePath {
    text.parse().expect("fixture paths are well formed")
}

fn ordering_name(o: std::cmp::Ordering) -> &'static str {
    match o {
        std::cmp::Ordering::Less => "less",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "greater",
    }
}

/// Recomputes the full golden text. Deterministic, newline-terminated.
pub fn golden_text() -> String {
    let mut lines: Vec<String> = Vec::new();
    let mut put = |key: &str, value: String| lines.push(format!("{key} = {value}"));

    put(
        "farey.adjacent -1 inf",
        farey_adjacent(&slope("-1"), &Slope::INFINITY)
            .unwrap()
            .to_string(),
    );

    for (path, dir, key) in [
        (["3", "inf", "2"], Direction::Clockwise, "rotation.cw 3,inf,2"),
        (["2", "inf", "2"], Direction::Clockwise, "rotation.cw 2,inf,2"),
        (["0", "inf", "2"], Direction::Clockwise, "rotation.cw 0,inf,2"),
    ] {
        let chain: Vec<Slope> = path.iter().map(|s| slope(s)).collect();
        put(
            key,
            ordering_name(arc_measure_vs_pi(&chain, dir).unwrap()).to_string(),
        );
    }

    let slice = BasicSlice::new(slope("-2"), slope("-1"), Sign::Plus).unwrap();
    put(
        "slice.euler -2,-1 +",
        slice_euler_contribution(&slice).to_string(),
    );
    let slice = BasicSlice::new(slope("-1"), slope("0"), Sign::Minus).unwrap();
    put(
        "slice.euler -1,0 -",
        slice_euler_contribution(&slice).to_string(),
    );

    for signs in ["++", "--", "+-"] {
        let p = slice_path(&format!("-2,-1,0 ; {signs}"));
        put(
            &format!("path.euler -2,-1,0 {signs}"),
            relative_euler_class(&p).to_string(),
        );
    }
    put(
        "path.universally_tight -2,-1,0 ++",
        is_universally_tight(&slice_path("-2,-1,0 ; ++")).to_string(),
    );
    put(
        "path.mixed -2,-1,0 +- i=1",
        is_mixed_torus(&slice_path("-2,-1,0 ; +-"), 1)
            .unwrap()
            .to_string(),
    );

    put(
        "count_tight -1",
        count_tight_solid_torus(&slope("-1")).unwrap().to_string(),
    );

    let spec = SplitSpec::from_integer(2);
    for s in [3i64, 2, 0] {
        let v = check_split_slope(&spec, Slope::from(s)).unwrap();
        let text = match (v.status, v.reason) {
            (SplitStatus::TightCandidate, _) => "tight-candidate".to_string(),
            (SplitStatus::Overtwisted, Some(r)) => format!("overtwisted {}", r.as_str()),
            (SplitStatus::Overtwisted, None) => unreachable!("overtwisted carries a reason"),
        };
        put(&format!("split.s2=2 s={s}"), text);
    }
    for s2 in [1i64, 3, 0] {
        let range = splitting_slopes(&SplitSpec::from_integer(s2));
        let text = if range.is_empty() {
            "none".to_string()
        } else {
            range
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        put(&format!("split.range s2={s2}"), text);
    }

    put("surgery.phi-", surgery_gluing_map(Sign::Minus).to_string());
    put("surgery.phi+", surgery_gluing_map(Sign::Plus).to_string());
    let base = slopekit::LegendrianModel::standard(-1, 0);
    put(
        "surgery.stabilized_dividing_slope",
        slopekit::stabilize(&base, Sign::Plus)
            .dividing_slope()
            .to_string(),
    );

    let table = surgery_slope_table();
    for (name, value) in table.entries() {
        put(&format!("slopes.{name}"), value.to_string());
    }
    put(
        "slopes.surgery_meridian_class",
        table.surgery_meridian_class.to_string(),
    );

    for m in [0i64, -1, 2, 1] {
        let v = classify_meridian(m);
        let side = |status: SideStatus| match status {
            SideStatus::Tight => "tight",
            SideStatus::Overtwisted => "X",
        };
        let mut text = format!("M1={} M2={}", side(v.m1), side(v.m2));
        if let Some((a, b)) = &v.identification {
            text.push_str(&format!(" {a} {b}"));
        }
        put(&format!("meridian m={m}"), text);
    }

    let orbit_table = default_mixed_torus_table();
    put(
        "orbits.e1",
        orbit_table.get("e1").unwrap().homology.to_string(),
    );
    put(
        "orbits.cz.h2",
        orbit_table.get("h2").unwrap().cz_index.to_string(),
    );
    let h2 = orbit_table.get("h2").unwrap().action();
    let e3e4 = orbit_table.get("e3").unwrap().action() + orbit_table.get("e4").unwrap().action();
    put("orbits.action h2 < e3+e4", (h2 < e3e4).to_string());

    let e1 = orbit_table.get("e1").unwrap();
    let found = feasible_buildings(e1.homology, e1.action(), &["e3", "e4", "h5", "e5"], &orbit_table)
        .unwrap();
    put(
        "orbits.feasible e1 over e3,e4,h5,e5",
        if found.is_empty() {
            "none".to_string()
        } else {
            found
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(" | ")
        },
    );

    let h2_datum = orbit_table.get("h2").unwrap();
    let big = slopekit::Action::from_integer(100);
    let found = feasible_buildings(h2_datum.homology, big, &["e3", "e4"], &orbit_table).unwrap();
    put(
        "orbits.feasible h2 over e3,e4 budget=100",
        found
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(" | "),
    );
    let found = feasible_buildings(
        h2_datum.homology,
        h2_datum.action(),
        &["e3", "e4"],
        &orbit_table,
    )
    .unwrap();
    put(
        &format!(
            "orbits.feasible h2 over e3,e4 budget={}",
            format_action(&h2_datum.action())
        ),
        if found.is_empty() {
            "none".to_string()
        } else {
            found
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(" | ")
        },
    );

    put(
        "orbits.chern ind=1 cz=1",
        chern_from_index(1, 1).unwrap().to_string(),
    );

    let report = breaking_scan(&orbit_table, &Building::from_names(["e1", "e2"]), None).unwrap();
    put(
        "orbits.scan e1,e2",
        report
            .survivors
            .iter()
            .map(|c| format!("{}=>{}", c.broken, c.intermediates))
            .collect::<Vec<_>>()
            .join(" | "),
    );

    let mut table_lines = vec!["surgery.table m=-3..3".to_string()];
    for v in slopekit::meridian_table(-3, 3) {
        let side = |status: SideStatus| match status {
            SideStatus::Tight => "tight",
            SideStatus::Overtwisted => "X",
        };
        table_lines.push(format!(
            "  {} {} {}",
            v.meridian_class,
            side(v.m1),
            side(v.m2)
        ));
    }
    lines.extend(table_lines);

    let mut text = lines.join("\n");
    text.push('\n');
    text
}

pub fn default_dir() -> PathBuf {
    if let Ok(dir) = std::env::var(DIR_ENV) {
        return PathBuf::from(dir);
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn run(dir: Option<&Path>, update: bool) -> Result<Rendered, Error> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_dir);
    let path = dir.join(GOLDEN_FILE);
    let current = golden_text();

    if update {
        std::fs::create_dir_all(&dir).map_err(|e| Error::ParseError {
            input: dir.display().to_string(),
            expected: Box::leak(format!("a writable fixture directory ({e})").into_boxed_str()),
        })?;
        std::fs::write(&path, &current).map_err(|e| Error::ParseError {
            input: path.display().to_string(),
            expected: Box::leak(format!("a writable golden file ({e})").into_boxed_str()),
        })?;
        let line = format!("wrote {}", path.display());
        return Ok(Rendered {
            payload: json!({ "written": path.display().to_string() }),
            lines: vec![line.clone()],
            essential: vec![line],
            ok: true,
        });
    }

    let stored = std::fs::read_to_string(&path).unwrap_or_default();
    let mut diff_lines = Vec::new();
    let stored_lines: Vec<&str> = stored.lines().collect();
    let current_lines: Vec<&str> = current.lines().collect();
    let max = stored_lines.len().max(current_lines.len());
    for i in 0..max {
        let old = stored_lines.get(i).copied().unwrap_or("<missing>");
        let new = current_lines.get(i).copied().unwrap_or("<missing>");
        if old != new {
            diff_lines.push(format!("line {}: stored {:?} != computed {:?}", i + 1, old, new));
        }
    }

    let ok = diff_lines.is_empty();
    let mut lines = Vec::new();
    if ok {
        lines.push(format!(
            "{} golden values verified against {}",
            current_lines.len(),
            path.display()
        ));
    } else {
        lines.push(format!("golden file diverges: {}", path.display()));
        lines.extend(diff_lines.iter().cloned());
    }
    Ok(Rendered {
        payload: json!({
            "file": path.display().to_string(),
            "checked": current_lines.len(),
            "matches": ok,
            "diff": diff_lines,
        }),
        essential: lines.clone(),
        lines,
        ok,
    })
}
