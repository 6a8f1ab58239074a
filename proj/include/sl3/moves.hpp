#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "sl3/web.hpp"

namespace sl3 {

enum class MoveKind { Birth, Death, Saddle, Zip, Unzip, DigonCup, DigonCap, Dot, Frame };

std::string to_string(MoveKind k);
MoveKind move_kind_from_string(const std::string& s);

/// A free loop appearing (Birth) or disappearing (Death).
struct LoopData {
  int loop = 0;
  std::vector<int> segments;
  friend bool operator==(const LoopData&, const LoopData&) = default;
};

/// Saddle between free loops: `merged` is the single loop on the one-loop side.
struct SaddleData {
  bool merging = true;  // two loops -> one
  int first = 0, second = 0, merged = 0;
  std::vector<int> first_segments, second_segments;
  friend bool operator==(const SaddleData&, const SaddleData&) = default;
};

struct DotData {
  int edge = 0;
  friend bool operator==(const DotData&, const DotData&) = default;
};

/// Zip/unzip between two strands a and b running side by side, b on the right
/// of a. On the zipped side: sink v with rotation (m, a_low, b_low), source w
/// with rotation (b_high, a_high, m), middle edge m from w to v. On the
/// unzipped side the strands are edges `a` and `b` (possibly equal), cut at
/// segment positions `a_pos` and `b_pos`.
struct ZipData {
  int a = 0, b = 0;
  int a_pos = 0, b_pos = 0;
  int v = 0, w = 0, m = 0;
  int a_low = 0, a_high = 0, b_low = 0, b_high = 0;
  std::vector<int> m_segments;
  friend bool operator==(const ZipData&, const ZipData&) = default;
};

/// Digon inserted into (cup) or collapsed out of (cap) edge `e`. On the digon
/// side: e_a runs into sink x, e_b leaves source y, and d1 (left) and d2
/// (right, looking along e) run from y to x. Rotations: x = (d2, d1, e_a),
/// y = (e_b, d1, d2).
struct DigonData {
  int e = 0, e_pos = 0;
  int x = 0, y = 0, d1 = 0, d2 = 0, e_a = 0, e_b = 0;
  std::vector<int> d1_segments, d2_segments;
  friend bool operator==(const DigonData&, const DigonData&) = default;
};

/// Relabeling (planar isotopy that only renames cells).
struct FrameData {
  std::map<int, int> edge_map;
  std::map<int, int> vertex_map;
  friend bool operator==(const FrameData&, const FrameData&) = default;
};

using MoveData = std::variant<LoopData, SaddleData, DotData, ZipData, DigonData, FrameData>;

/// Elementary foam move localized to a disk of the current frame.
struct Move {
  MoveKind kind = MoveKind::Frame;
  MoveData data;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Applies the move to the web in place; throws std::invalid_argument when the
/// move's precondition fails in the given frame.
void apply_to_web(Web& w, const Move& m);

/// The move undoing `m`; frames of a reflected movie are traversed backwards.
Move inverse(const Move& m);

/// Degree contribution chi(next) - chi(prev) - 2*(local chi change) + 2*dots.
int move_degree(const Move& m);

// Builders that resolve every identifier against the current frame.
Move make_birth(const Web& w, std::vector<int> segments = {});
Move make_death(const Web& w, int loop);
Move make_dot(const Web& w, int edge);
Move make_saddle_merge(const Web& w, int first, int second);
Move make_saddle_split(const Web& w, int loop, std::size_t cut);
/// Zip strand a (cut before segment index a_pos) with strand b lying on its right.
Move make_zip(const Web& w, int a, int a_pos, int b, int b_pos, int v_id, int w_id,
              std::vector<int> m_segments = {});
Move make_unzip(const Web& w, int m);
/// Inserts a digon into edge e before segment index e_pos.
Move make_digon_cup(const Web& w, int e, int e_pos = 0);
/// Collapses the digon face bounded by edges p and q.
Move make_digon_cap(const Web& w, int p, int q);
Move make_frame(const Web& w, FrameData relabel);
/// Frame move renaming each edge to its smallest segment label.
Move make_segment_frame(const Web& w);

}  // namespace sl3
