//! C ABI over the scene compiler.
//!
//! Scenes are opaque handles. Every call returns a `CodeparkStatus`; on
//! failure `codepark_last_error` describes what went wrong on the calling
//! thread. Strings handed out by the library are owned by the caller and
//! released with `codepark_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use codepark::error::Error;
use codepark::layout::Arrangement;
use codepark::parser::ClassId;
use codepark::scene::{build_from_dir, Scene};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeparkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidArgument = 2,
    /// Reading or writing a file failed.
    Io = 3,
    /// A source file was not valid UTF-8.
    Decode = 4,
    /// The source tree holds no classes.
    NoClasses = 5,
    /// A scene or arrangement document could not be parsed or is inconsistent.
    InvalidDocument = 6,
    /// The arrangement was rejected (collisions, unknown classes).
    LayoutRejected = 7,
    /// No such class or wall.
    NotFound = 8,
    /// A bug in the library; the message has details.
    Internal = 9,
}

/// Opaque scene handle.
pub struct CodeparkScene {
    scene: Scene,
}

/// Headline metrics of a scene.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CodeparkSummary {
    pub num_classes: u64,
    pub total_loc: u64,
    pub largest_class_loc: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', "\\0")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(CodeparkStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Io { .. } | Error::NotADirectory(_) => CodeparkStatus::Io,
            Error::Decode { .. } => CodeparkStatus::Decode,
            Error::NoClasses => CodeparkStatus::NoClasses,
            Error::Layout(_) => CodeparkStatus::LayoutRejected,
            Error::Json(_) | Error::Consistency(_) => CodeparkStatus::InvalidDocument,
            _ => CodeparkStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

/// Run `f`, record any failure for `codepark_last_error` and turn panics
/// into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CodeparkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CodeparkStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            set_error(format!("internal error: {msg}"));
            CodeparkStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(CodeparkStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(CodeparkStatus::InvalidArgument, format!("{what} is not UTF-8: {e}")))
}

unsafe fn scene_arg<'a>(p: *const CodeparkScene) -> Result<&'a CodeparkScene, Failure> {
    p.as_ref().ok_or_else(|| Failure(CodeparkStatus::NullArgument, "scene is null".into()))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure(CodeparkStatus::NullArgument, format!("{what} is null")))
}

fn owned_string(s: String) -> *mut c_char {
    // canonical JSON escapes control characters, so no interior nul
    CString::new(s).expect("no interior nul").into_raw()
}

fn hand_out(out: *mut *mut CodeparkScene, scene: Scene) -> Result<(), Failure> {
    let slot = unsafe { out_arg(out, "out")? };
    *slot = Box::into_raw(Box::new(CodeparkScene { scene }));
    Ok(())
}

/// Analyse the C# tree under `dir` and build its scene.
///
/// # Safety
/// `dir` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_build(dir: *const c_char, out: *mut *mut CodeparkScene) -> CodeparkStatus {
    guard(|| {
        let dir = str_arg(dir, "dir")?;
        let (scene, _) = build_from_dir(dir, None)?;
        hand_out(out, scene)
    })
}

/// Read a scene document written by `codepark build`.
///
/// # Safety
/// `path` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_load(path: *const c_char, out: *mut *mut CodeparkScene) -> CodeparkStatus {
    guard(|| {
        let scene = Scene::load(str_arg(path, "path")?)?;
        hand_out(out, scene)
    })
}

/// Parse a scene document held in memory.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_from_json(json: *const c_char, out: *mut *mut CodeparkScene) -> CodeparkStatus {
    guard(|| {
        let scene = Scene::from_json(str_arg(json, "json")?)?;
        hand_out(out, scene)
    })
}

/// Release a scene. Null is ignored.
///
/// # Safety
/// `scene` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_free(scene: *mut CodeparkScene) {
    if !scene.is_null() {
        drop(Box::from_raw(scene));
    }
}

/// The canonical scene document. Free the result with `codepark_string_free`.
///
/// # Safety
/// `scene` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_json(scene: *const CodeparkScene, out: *mut *mut c_char) -> CodeparkStatus {
    guard(|| {
        let json = scene_arg(scene)?.scene.to_canonical_json();
        *out_arg(out, "out")? = owned_string(json);
        Ok(())
    })
}

/// Write the canonical scene document to `path`.
///
/// # Safety
/// `scene` must be a live handle; `path` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_write(scene: *const CodeparkScene, path: *const c_char) -> CodeparkStatus {
    guard(|| {
        let scene = scene_arg(scene)?;
        scene.scene.write(str_arg(path, "path")?)?;
        Ok(())
    })
}

/// # Safety
/// `scene` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_summary(scene: *const CodeparkScene, out: *mut CodeparkSummary) -> CodeparkStatus {
    guard(|| {
        let s = &scene_arg(scene)?.scene.summary;
        *out_arg(out, "out")? = CodeparkSummary {
            num_classes: s.num_classes as u64,
            total_loc: s.total_loc as u64,
            largest_class_loc: s.largest_class_loc as u64,
        };
        Ok(())
    })
}

/// One wall page as JSON (wall 0 is the method overview, 1 to 3 hold code).
/// Free the result with `codepark_string_free`.
///
/// # Safety
/// `scene` must be a live handle, `class_id` a nul-terminated string and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_wall_json(
    scene: *const CodeparkScene,
    class_id: *const c_char,
    wall_index: u32,
    out: *mut *mut c_char,
) -> CodeparkStatus {
    guard(|| {
        let scene = scene_arg(scene)?;
        let id = ClassId(str_arg(class_id, "class_id")?.to_string());
        let wall = scene
            .scene
            .wall(&id, wall_index as usize)
            .ok_or_else(|| Failure(CodeparkStatus::NotFound, format!("no wall {wall_index} for class {id}")))?;
        let json = codepark::canonical::to_canonical_string(wall).map_err(|e| Failure(CodeparkStatus::Internal, e.to_string()))?;
        *out_arg(out, "out")? = owned_string(json);
        Ok(())
    })
}

/// Move rooms to the centers in `arrangement_json`. On any failure the scene
/// is left as it was.
///
/// # Safety
/// `scene` must be a live handle; `arrangement_json` a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn codepark_scene_apply_arrangement(
    scene: *mut CodeparkScene,
    arrangement_json: *const c_char,
) -> CodeparkStatus {
    guard(|| {
        let handle = out_arg(scene, "scene")?;
        let arrangement: Arrangement = serde_json::from_str(str_arg(arrangement_json, "arrangement_json")?).map_err(Error::from)?;
        handle.scene = handle.scene.with_arrangement(&arrangement)?;
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn codepark_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn codepark_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, statically allocated.
#[no_mangle]
pub extern "C" fn codepark_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
