//! The scene document handed to the viewer.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::canonical::to_canonical_string;
use crate::error::{Error, Result};
use crate::layout::{layout_park, Arrangement, ParkLayout, RoomInput};
use crate::metrics::CodebaseSummary;
use crate::model::Codebase;
use crate::parser::{ClassId, TypeKind};
use crate::wallpaper::{paginate, ColorRole, NavigationTarget, WallPage, PALETTE, WALLS_PER_ROOM};

pub const SCENE_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodInfo {
    pub name: String,
    pub signature: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<NavigationTarget>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub qualified_name: String,
    pub kind: TypeKind,
    pub path: String,
    pub directory: String,
    pub methods: Vec<MethodInfo>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub version: u32,
    pub summary: CodebaseSummary,
    pub layout: ParkLayout,
    pub walls: BTreeMap<ClassId, Vec<WallPage>>,
    pub classes: BTreeMap<ClassId, ClassInfo>,
    pub palette: BTreeMap<ColorRole, String>,
    /// `sha256:` digest of the source paths and contents.
    pub generated_from: String,
}

pub fn room_inputs(analysis: &Analysis) -> Vec<RoomInput> {
    analysis
        .classes
        .iter()
        .map(|c| RoomInput {
            class_id: c.class_id.clone(),
            name: c.name.clone(),
            directory: analysis.codebase.unit(c.file_id).directory.clone(),
            loc: analysis.summary.per_class_loc[&c.class_id],
        })
        .collect()
}

pub fn build_scene(analysis: &Analysis, arrangement: Option<&Arrangement>) -> Result<Scene> {
    if analysis.classes.is_empty() {
        return Err(Error::NoClasses);
    }
    let layout = layout_park(&room_inputs(analysis), arrangement)?;
    let walls = paginate(analysis);
    let classes = analysis
        .classes
        .iter()
        .map(|c| {
            let overview = &walls[&c.class_id][0];
            let methods = c
                .methods
                .iter()
                .enumerate()
                .map(|(i, m)| MethodInfo {
                    name: m.name.clone(),
                    signature: m.signature_text.clone(),
                    // line 0 is the header
                    target: overview.lines[i + 1].runs.iter().find_map(|r| r.target.clone()),
                })
                .collect();
            let unit = analysis.codebase.unit(c.file_id);
            let info = ClassInfo {
                name: c.name.clone(),
                qualified_name: c.qualified_name.clone(),
                kind: c.kind,
                path: unit.path.clone(),
                directory: unit.directory.clone(),
                methods,
            };
            (c.class_id.clone(), info)
        })
        .collect();
    Ok(Scene {
        version: SCENE_VERSION,
        summary: analysis.summary.clone(),
        layout,
        walls,
        classes,
        palette: crate::wallpaper::Palette::ROLES
            .iter()
            .map(|&r| (r, PALETTE.color(r).to_string()))
            .collect(),
        generated_from: format!("sha256:{}", analysis.codebase.content_hash()),
    })
}

/// Ingest, analyse and build in one go.
pub fn build_from_dir(root: impl AsRef<Path>, arrangement: Option<&Arrangement>) -> Result<(Scene, Analysis)> {
    let analysis = Analysis::run(Codebase::ingest(root)?);
    let scene = build_scene(&analysis, arrangement)?;
    Ok((scene, analysis))
}

impl Scene {
    pub fn to_canonical_json(&self) -> String {
        to_canonical_string(self).expect("scene always serializes")
    }

    /// Parse and check a scene document.
    pub fn from_json(text: &str) -> Result<Scene> {
        let scene: Scene = serde_json::from_str(text)?;
        scene.validate()?;
        Ok(scene)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Scene> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Scene::from_json(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        std::fs::write(path, self.to_canonical_json()).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn wall(&self, class_id: &ClassId, wall_index: usize) -> Option<&WallPage> {
        self.walls.get(class_id)?.get(wall_index)
    }

    /// The same scene with rooms moved to `arrangement`.
    pub fn with_arrangement(&self, arrangement: &Arrangement) -> Result<Scene> {
        let layout = self.layout.with_arrangement(arrangement)?;
        Ok(Scene { layout, ..self.clone() })
    }

    /// Cross-reference checks: rooms, walls and class entries agree and
    /// every navigation target lands on an existing wall line.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Consistency(msg));
        if self.version != SCENE_VERSION {
            return fail(format!("unsupported version {}", self.version));
        }
        if self.layout.rooms.len() != self.summary.num_classes || self.walls.len() != self.layout.rooms.len() {
            return fail(format!(
                "{} classes, {} rooms, {} wall sets",
                self.summary.num_classes,
                self.layout.rooms.len(),
                self.walls.len()
            ));
        }
        for room in &self.layout.rooms {
            let Some(walls) = self.walls.get(&room.class_id) else {
                return fail(format!("room {} has no walls", room.class_id));
            };
            if walls.len() != WALLS_PER_ROOM {
                return fail(format!("room {} has {} walls", room.class_id, walls.len()));
            }
            if !self.classes.contains_key(&room.class_id) {
                return fail(format!("room {} has no class entry", room.class_id));
            }
            if !self.layout.groups.iter().any(|g| g.group_id == room.group_id) {
                return fail(format!("room {} names unknown group {}", room.class_id, room.group_id));
            }
        }
        for (id, walls) in &self.walls {
            for (i, w) in walls.iter().enumerate() {
                if w.wall_index != i || &w.class_id != id {
                    return fail(format!("wall {i} of {id} is mislabelled"));
                }
            }
            let targets = walls
                .iter()
                .flat_map(|w| &w.lines)
                .flat_map(|l| &l.runs)
                .filter_map(|r| r.target.as_ref());
            for t in targets {
                let ok = self.wall(&t.class_id, t.wall_index).is_some_and(|w| t.line < w.lines.len() && t.scroll_offset <= w.scroll_max);
                if !ok {
                    return fail(format!("dangling navigation target {t:?}"));
                }
            }
        }
        let violations = self.layout.violations();
        if !violations.is_empty() {
            return fail(format!("layout has {} invariant violations", violations.len()));
        }
        Ok(())
    }
}
