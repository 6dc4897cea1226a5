//! Park layout: square rooms grouped by source directory on a grass plane.
//!
//! Rooms are sized so floor area tracks class size and shaded darker as
//! classes grow. Each directory's rooms pack into a near-square grid; the
//! groups then pack into rows whose wrap width keeps the park close to
//! square. Coordinates are meters on the ground plane (`x` right, `z` down).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parser::ClassId;

pub const MIN_ROOM_SIDE: f64 = 4.0;
pub const MAX_ROOM_SIDE: f64 = 10.0;
pub const ROOM_HEIGHT: f64 = 3.0;
/// Minimum walking gap between any two rooms.
pub const ROOM_GAP: f64 = 2.0;
/// Space between a group's outermost rooms and its boundary.
pub const GROUP_PADDING: f64 = 2.0;
/// Space between neighbouring group boundaries.
pub const GROUP_MARGIN: f64 = 6.0;
/// Grass border around the outermost groups.
pub const GROUND_BORDER: f64 = 10.0;

pub const LIGHTNESS_MAX: f64 = 0.85;
pub const LIGHTNESS_RANGE: f64 = 0.50;
/// OKLab chroma axes of the warm-gray exterior hue.
pub const EXTERIOR_A: f64 = 0.006;
pub const EXTERIOR_B: f64 = 0.018;

/// Slack for comparisons on user-supplied coordinates.
const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub min_x: f64,
    pub min_z: f64,
    pub max_x: f64,
    pub max_z: f64,
}

impl Rect {
    pub fn centered(x: f64, z: f64, side: f64) -> Rect {
        Rect {
            min_x: x - side / 2.0,
            min_z: z - side / 2.0,
            max_x: x + side / 2.0,
            max_z: z + side / 2.0,
        }
    }

    pub fn width(&self) -> f64 {
        self.max_x - self.min_x
    }

    pub fn depth(&self) -> f64 {
        self.max_z - self.min_z
    }

    pub fn center(&self) -> (f64, f64) {
        ((self.min_x + self.max_x) / 2.0, (self.min_z + self.max_z) / 2.0)
    }

    pub fn expand(&self, by: f64) -> Rect {
        Rect {
            min_x: self.min_x - by,
            min_z: self.min_z - by,
            max_x: self.max_x + by,
            max_z: self.max_z + by,
        }
    }

    pub fn translate(&self, dx: f64, dz: f64) -> Rect {
        Rect {
            min_x: self.min_x + dx,
            min_z: self.min_z + dz,
            max_x: self.max_x + dx,
            max_z: self.max_z + dz,
        }
    }

    pub fn union(&self, other: &Rect) -> Rect {
        Rect {
            min_x: self.min_x.min(other.min_x),
            min_z: self.min_z.min(other.min_z),
            max_x: self.max_x.max(other.max_x),
            max_z: self.max_z.max(other.max_z),
        }
    }

    /// Interiors overlap (touching edges do not count).
    pub fn overlaps(&self, other: &Rect) -> bool {
        self.min_x < other.max_x && other.min_x < self.max_x && self.min_z < other.max_z && other.min_z < self.max_z
    }

    /// Walking distance between two rectangles: the larger of the x and z
    /// separations, 0 when they overlap or touch.
    pub fn gap(&self, other: &Rect) -> f64 {
        let dx = (other.min_x - self.max_x).max(self.min_x - other.max_x).max(0.0);
        let dz = (other.min_z - self.max_z).max(self.min_z - other.max_z).max(0.0);
        dx.max(dz)
    }

    pub fn strictly_contains(&self, inner: &Rect) -> bool {
        self.min_x < inner.min_x && self.min_z < inner.min_z && inner.max_x < self.max_x && inner.max_z < self.max_z
    }

    pub fn contains(&self, inner: &Rect) -> bool {
        self.min_x <= inner.min_x && self.min_z <= inner.min_z && inner.max_x <= self.max_x && inner.max_z <= self.max_z
    }

    fn bounding(rects: impl IntoIterator<Item = Rect>) -> Option<Rect> {
        rects.into_iter().reduce(|a, b| a.union(&b))
    }
}

/// Exterior color in OKLab, plus its sRGB hex for renderers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Color {
    pub l: f64,
    pub a: f64,
    pub b: f64,
    pub hex: String,
}

impl Color {
    pub fn from_oklab(l: f64, a: f64, b: f64) -> Color {
        Color {
            l,
            a,
            b,
            hex: oklab_to_srgb_hex(l, a, b),
        }
    }
}

fn oklab_to_srgb_hex(l: f64, a: f64, b: f64) -> String {
    let l_ = (l + 0.3963377774 * a + 0.2158037573 * b).powi(3);
    let m_ = (l - 0.1055613458 * a - 0.0638541728 * b).powi(3);
    let s_ = (l - 0.0894841775 * a - 1.2914855480 * b).powi(3);
    let lin = [
        4.0767416621 * l_ - 3.3077115913 * m_ + 0.2309699292 * s_,
        -1.2684380046 * l_ + 2.6097574011 * m_ - 0.3413193965 * s_,
        -0.0041960863 * l_ - 0.7034186147 * m_ + 1.7076147010 * s_,
    ];
    let encode = |c: f64| {
        let c = c.clamp(0.0, 1.0);
        let v = if c <= 0.0031308 { 12.92 * c } else { 1.055 * c.powf(1.0 / 2.4) - 0.055 };
        (v * 255.0).round() as u8
    };
    format!("#{:02X}{:02X}{:02X}", encode(lin[0]), encode(lin[1]), encode(lin[2]))
}

/// Side length (m) of a room: `4 + 6·sqrt(loc/loc_max)`, rounded to 0.5 m.
pub fn room_side(loc: usize, loc_max: usize) -> f64 {
    if loc_max == 0 {
        return MIN_ROOM_SIDE;
    }
    let ratio = (loc.min(loc_max) as f64 / loc_max as f64).sqrt();
    let side = MIN_ROOM_SIDE + (MAX_ROOM_SIDE - MIN_ROOM_SIDE) * ratio;
    (side * 2.0).round() / 2.0
}

/// OKLab lightness: 0.85 for the smallest class down to 0.35 for the largest.
pub fn room_lightness(loc: usize, loc_min: usize, loc_max: usize) -> f64 {
    if loc_max <= loc_min {
        return LIGHTNESS_MAX;
    }
    let loc = loc.clamp(loc_min, loc_max);
    LIGHTNESS_MAX - LIGHTNESS_RANGE * (loc - loc_min) as f64 / (loc_max - loc_min) as f64
}

pub fn room_color(loc: usize, loc_min: usize, loc_max: usize) -> Color {
    Color::from_oklab(room_lightness(loc, loc_min, loc_max), EXTERIOR_A, EXTERIOR_B)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Room {
    pub class_id: ClassId,
    pub footprint: Rect,
    pub height: f64,
    pub exterior_color: Color,
    pub group_id: String,
    pub roof_label: String,
    pub loc: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectoryGroup {
    pub group_id: String,
    pub directory: String,
    pub label_text: String,
    pub bounds: Rect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ArrangementSource {
    Computed,
    UserOverride,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParkLayout {
    pub rooms: Vec<Room>,
    pub groups: Vec<DirectoryGroup>,
    pub ground_extent: Rect,
    pub arrangement_source: ArrangementSource,
}

/// What the layout needs to know about one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoomInput {
    pub class_id: ClassId,
    pub name: String,
    pub directory: String,
    pub loc: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundPoint {
    pub x: f64,
    pub z: f64,
}

/// User-authored room centers. Persisted as
/// `{"version":1,"positions":{"<class_id>":{"x":..,"z":..}}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Arrangement {
    pub version: u32,
    pub positions: BTreeMap<ClassId, GroundPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saved_at: Option<String>,
}

impl Arrangement {
    pub const VERSION: u32 = 1;

    pub fn new(positions: BTreeMap<ClassId, GroundPoint>) -> Self {
        Arrangement {
            version: Self::VERSION,
            positions,
            saved_at: None,
        }
    }

    /// Current room centers of `layout`.
    pub fn of_layout(layout: &ParkLayout) -> Self {
        Arrangement::new(
            layout
                .rooms
                .iter()
                .map(|r| {
                    let (x, z) = r.footprint.center();
                    (r.class_id.clone(), GroundPoint { x, z })
                })
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Two rooms closer than the walking gap (or overlapping).
    RoomGap,
    RoomOutsideGroup,
    GroupOverlap,
    OutsideGround,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub a: String,
    pub b: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::RoomGap => "rooms too close",
            ViolationKind::RoomOutsideGroup => "room outside its group",
            ViolationKind::GroupOverlap => "groups overlap",
            ViolationKind::OutsideGround => "outside the ground",
        };
        write!(f, "{what}: {} / {}", self.a, self.b)
    }
}

#[derive(Debug, Error)]
pub enum LayoutError {
    #[error("cannot lay out a park without classes")]
    Empty,
    #[error("unsupported arrangement version {0}")]
    UnsupportedVersion(u32),
    #[error("arrangement names unknown classes: {}", join(.0))]
    UnknownClasses(Vec<ClassId>),
    #[error("arrangement position for {0} is not finite")]
    NonFinite(ClassId),
    #[error("arrangement breaks layout invariants: {}", join(.0))]
    Collisions(Vec<Violation>),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

struct PackedGroup {
    directory: String,
    /// Room footprints relative to the group's own origin.
    rooms: Vec<(usize, Rect)>,
    bounds: Rect,
}

fn pack_group(directory: &str, members: &[(usize, f64)]) -> PackedGroup {
    let n = members.len();
    let cols = (n as f64).sqrt().ceil() as usize;
    let rows = n.div_ceil(cols);
    let mut col_w = vec![0.0f64; cols];
    let mut row_d = vec![0.0f64; rows];
    for (k, &(_, side)) in members.iter().enumerate() {
        col_w[k % cols] = col_w[k % cols].max(side);
        row_d[k / cols] = row_d[k / cols].max(side);
    }
    let col_x: Vec<f64> = col_w
        .iter()
        .scan(0.0, |x, w| {
            let at = *x;
            *x += w + ROOM_GAP;
            Some(at)
        })
        .collect();
    let row_z: Vec<f64> = row_d
        .iter()
        .scan(0.0, |z, d| {
            let at = *z;
            *z += d + ROOM_GAP;
            Some(at)
        })
        .collect();
    let rooms: Vec<(usize, Rect)> = members
        .iter()
        .enumerate()
        .map(|(k, &(idx, side))| {
            let (c, r) = (k % cols, k / cols);
            let cx = col_x[c] + col_w[c] / 2.0;
            let cz = row_z[r] + row_d[r] / 2.0;
            (idx, Rect::centered(cx, cz, side))
        })
        .collect();
    let bounds = Rect::bounding(rooms.iter().map(|r| r.1)).expect("group has rooms").expand(GROUP_PADDING);
    PackedGroup {
        directory: directory.to_string(),
        rooms,
        bounds,
    }
}

/// Row-major shelf placement of group boxes wrapping at `max_width`;
/// returns each group's top-left corner and the overall extent.
fn shelf(sizes: &[(f64, f64)], max_width: f64) -> (Vec<(f64, f64)>, f64, f64) {
    let mut out = Vec::with_capacity(sizes.len());
    let (mut x, mut z, mut row_depth, mut width) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &(w, d) in sizes {
        if x > 0.0 && x + w > max_width + EPS {
            z += row_depth + GROUP_MARGIN;
            x = 0.0;
            row_depth = 0.0;
        }
        out.push((x, z));
        width = width.max(x + w);
        row_depth = row_depth.max(d);
        x += w + GROUP_MARGIN;
    }
    (out, width, z + row_depth)
}

/// Wrap width giving the most square park; candidates are the widths of
/// every contiguous run of groups.
fn choose_wrap_width(sizes: &[(f64, f64)]) -> f64 {
    let mut best: Option<(f64, f64, f64)> = None; // (|ln aspect|, area, width)
    for i in 0..sizes.len() {
        let mut run = 0.0;
        for (j, &(w, _)) in sizes.iter().enumerate().skip(i) {
            run += w + if j > i { GROUP_MARGIN } else { 0.0 };
            let (_, width, depth) = shelf(sizes, run);
            let score = (width / depth).ln().abs();
            let cand = (score, width * depth, run);
            let better = match best {
                None => true,
                Some(b) => cand.partial_cmp(&b) == Some(std::cmp::Ordering::Less),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.map(|b| b.2).unwrap_or(0.0)
}

/// Lay out one room per input, grouped by directory, then apply `overrides`.
pub fn layout_park(inputs: &[RoomInput], overrides: Option<&Arrangement>) -> Result<ParkLayout, LayoutError> {
    if inputs.is_empty() {
        return Err(LayoutError::Empty);
    }
    let loc_max = inputs.iter().map(|r| r.loc).max().unwrap_or(0);
    let loc_min = inputs.iter().map(|r| r.loc).min().unwrap_or(0);

    let mut by_dir: BTreeMap<&[u8], Vec<usize>> = BTreeMap::new();
    for (i, r) in inputs.iter().enumerate() {
        by_dir.entry(r.directory.as_bytes()).or_default().push(i);
    }
    let packed: Vec<PackedGroup> = by_dir
        .into_values()
        .map(|mut members| {
            members.sort_by(|&a, &b| {
                (inputs[a].name.as_str(), &inputs[a].class_id).cmp(&(inputs[b].name.as_str(), &inputs[b].class_id))
            });
            let sized: Vec<(usize, f64)> = members.iter().map(|&i| (i, room_side(inputs[i].loc, loc_max))).collect();
            pack_group(&inputs[members[0]].directory, &sized)
        })
        .collect();

    let sizes: Vec<(f64, f64)> = packed.iter().map(|g| (g.bounds.width(), g.bounds.depth())).collect();
    let (corners, width, depth) = shelf(&sizes, choose_wrap_width(&sizes));
    let (shift_x, shift_z) = (-width / 2.0, -depth / 2.0);

    let mut rooms = Vec::with_capacity(inputs.len());
    let mut groups = Vec::with_capacity(packed.len());
    for (g, &(cx, cz)) in packed.iter().zip(&corners) {
        let dx = cx - g.bounds.min_x + shift_x;
        let dz = cz - g.bounds.min_z + shift_z;
        for &(idx, rect) in &g.rooms {
            let input = &inputs[idx];
            rooms.push(Room {
                class_id: input.class_id.clone(),
                footprint: rect.translate(dx, dz),
                height: ROOM_HEIGHT,
                exterior_color: room_color(input.loc, loc_min, loc_max),
                group_id: g.directory.clone(),
                roof_label: input.name.clone(),
                loc: input.loc,
            });
        }
        groups.push(DirectoryGroup {
            group_id: g.directory.clone(),
            directory: g.directory.clone(),
            label_text: if g.directory == "." { "/".to_string() } else { g.directory.clone() },
            bounds: g.bounds.translate(dx, dz),
        });
    }
    let ground_extent = Rect::bounding(groups.iter().map(|g| g.bounds))
        .expect("at least one group")
        .expand(GROUND_BORDER);
    let layout = ParkLayout {
        rooms,
        groups,
        ground_extent,
        arrangement_source: ArrangementSource::Computed,
    };
    match overrides {
        Some(arrangement) => layout.with_arrangement(arrangement),
        None => Ok(layout),
    }
}

impl ParkLayout {
    pub fn room(&self, id: &ClassId) -> Option<&Room> {
        self.rooms.iter().find(|r| &r.class_id == id)
    }

    /// Move the named rooms to new centers, recompute group and ground
    /// bounds, and re-check every invariant.
    pub fn with_arrangement(&self, arrangement: &Arrangement) -> Result<ParkLayout, LayoutError> {
        if arrangement.version != Arrangement::VERSION {
            return Err(LayoutError::UnsupportedVersion(arrangement.version));
        }
        let index: HashMap<&ClassId, usize> = self.rooms.iter().enumerate().map(|(i, r)| (&r.class_id, i)).collect();
        let unknown: Vec<ClassId> = arrangement
            .positions
            .keys()
            .filter(|id| !index.contains_key(id))
            .cloned()
            .collect();
        if !unknown.is_empty() {
            return Err(LayoutError::UnknownClasses(unknown));
        }
        let mut next = self.clone();
        for (id, p) in &arrangement.positions {
            if !p.x.is_finite() || !p.z.is_finite() {
                return Err(LayoutError::NonFinite(id.clone()));
            }
            let room = &mut next.rooms[index[id]];
            room.footprint = Rect::centered(p.x, p.z, room.footprint.width());
        }
        for group in &mut next.groups {
            group.bounds = Rect::bounding(
                next.rooms
                    .iter()
                    .filter(|r| r.group_id == group.group_id)
                    .map(|r| r.footprint),
            )
            .expect("group has rooms")
            .expand(GROUP_PADDING);
        }
        next.ground_extent = Rect::bounding(next.groups.iter().map(|g| g.bounds))
            .expect("at least one group")
            .expand(GROUND_BORDER);
        next.arrangement_source = ArrangementSource::UserOverride;
        let violations = next.violations();
        if violations.is_empty() {
            Ok(next)
        } else {
            Err(LayoutError::Collisions(violations))
        }
    }

    /// Every broken geometric invariant, in a stable order.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (i, a) in self.rooms.iter().enumerate() {
            for b in &self.rooms[i + 1..] {
                if a.footprint.overlaps(&b.footprint) || a.footprint.gap(&b.footprint) < ROOM_GAP - EPS {
                    out.push(Violation {
                        kind: ViolationKind::RoomGap,
                        a: a.class_id.to_string(),
                        b: b.class_id.to_string(),
                    });
                }
            }
        }
        for room in &self.rooms {
            let inside = self
                .groups
                .iter()
                .find(|g| g.group_id == room.group_id)
                .is_some_and(|g| g.bounds.strictly_contains(&room.footprint));
            if !inside {
                out.push(Violation {
                    kind: ViolationKind::RoomOutsideGroup,
                    a: room.class_id.to_string(),
                    b: room.group_id.clone(),
                });
            }
            if !self.ground_extent.contains(&room.footprint) {
                out.push(Violation {
                    kind: ViolationKind::OutsideGround,
                    a: room.class_id.to_string(),
                    b: String::new(),
                });
            }
        }
        for (i, a) in self.groups.iter().enumerate() {
            for b in &self.groups[i + 1..] {
                if a.bounds.overlaps(&b.bounds) {
                    out.push(Violation {
                        kind: ViolationKind::GroupOverlap,
                        a: a.group_id.clone(),
                        b: b.group_id.clone(),
                    });
                }
            }
        }
        out
    }

    /// Width over depth of the area covered by groups.
    pub fn aspect_ratio(&self) -> f64 {
        let inner = self.ground_extent.expand(-GROUND_BORDER);
        inner.width() / inner.depth()
    }
}
