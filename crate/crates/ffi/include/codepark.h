/* Generated by cbindgen from src/lib.rs. Do not edit. */

#ifndef CODEPARK_H
#define CODEPARK_H

#include <stdint.h>

// Result of every fallible call.
typedef enum CodeparkStatus {
  CODEPARK_STATUS_OK = 0,
  // A required pointer argument was null.
  CODEPARK_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  CODEPARK_STATUS_INVALID_ARGUMENT = 2,
  // Reading or writing a file failed.
  CODEPARK_STATUS_IO = 3,
  // A source file was not valid UTF-8.
  CODEPARK_STATUS_DECODE = 4,
  // The source tree holds no classes.
  CODEPARK_STATUS_NO_CLASSES = 5,
  // A scene or arrangement document could not be parsed or is inconsistent.
  CODEPARK_STATUS_INVALID_DOCUMENT = 6,
  // The arrangement was rejected (collisions, unknown classes).
  CODEPARK_STATUS_LAYOUT_REJECTED = 7,
  // No such class or wall.
  CODEPARK_STATUS_NOT_FOUND = 8,
  // A bug in the library; the message has details.
  CODEPARK_STATUS_INTERNAL = 9,
} CodeparkStatus;

// Opaque scene handle.
typedef struct CodeparkScene CodeparkScene;

// Headline metrics of a scene.
typedef struct CodeparkSummary {
  uint64_t num_classes;
  uint64_t total_loc;
  uint64_t largest_class_loc;
} CodeparkSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Analyse the C# tree under `dir` and build its scene.
//
// # Safety
// `dir` must be a nul-terminated string; `out` must be writable.
enum CodeparkStatus codepark_build(const char *dir, struct CodeparkScene **out);

// Read a scene document written by `codepark build`.
//
// # Safety
// `path` must be a nul-terminated string; `out` must be writable.
enum CodeparkStatus codepark_load(const char *path, struct CodeparkScene **out);

// Parse a scene document held in memory.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum CodeparkStatus codepark_from_json(const char *json, struct CodeparkScene **out);

// Release a scene. Null is ignored.
//
// # Safety
// `scene` must come from this library and not be used afterwards.
void codepark_scene_free(struct CodeparkScene *scene);

// The canonical scene document. Free the result with `codepark_string_free`.
//
// # Safety
// `scene` must be a live handle; `out` must be writable.
enum CodeparkStatus codepark_scene_json(const struct CodeparkScene *scene, char **out);

// Write the canonical scene document to `path`.
//
// # Safety
// `scene` must be a live handle; `path` a nul-terminated string.
enum CodeparkStatus codepark_scene_write(const struct CodeparkScene *scene, const char *path);

// # Safety
// `scene` must be a live handle; `out` must be writable.
enum CodeparkStatus codepark_scene_summary(const struct CodeparkScene *scene,
                                           struct CodeparkSummary *out);

// One wall page as JSON (wall 0 is the method overview, 1 to 3 hold code).
// Free the result with `codepark_string_free`.
//
// # Safety
// `scene` must be a live handle, `class_id` a nul-terminated string and
// `out` writable.
enum CodeparkStatus codepark_scene_wall_json(const struct CodeparkScene *scene,
                                             const char *class_id,
                                             uint32_t wall_index,
                                             char **out);

// Move rooms to the centers in `arrangement_json`. On any failure the scene
// is left as it was.
//
// # Safety
// `scene` must be a live handle; `arrangement_json` a nul-terminated string.
enum CodeparkStatus codepark_scene_apply_arrangement(struct CodeparkScene *scene,
                                                     const char *arrangement_json);

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *codepark_last_error(void);

// Release a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void codepark_string_free(char *s);

// Library version, statically allocated.
const char *codepark_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CODEPARK_H */
