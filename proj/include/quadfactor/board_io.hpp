#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadfactor/disk.hpp"

namespace quadfactor {

/// Board text: lines of `#` (cell) and `.` or space (empty), first line on
/// top. LF or CRLF. The lowest row sits at y = 0 and the leftmost occupied
/// column at x = 0. Squares are numbered row by row from the bottom, left to
/// right; vertex names are "x,y".
QuadDisk parse_board(std::string_view text);

/// Same as parse_board for an explicit cell list (lower-left corners).
/// Cells are renumbered in (y, x) order.
QuadDisk board_from_cells(std::vector<Point> cells);

/// Complex text: header `quadcomplex`, then one `s <index>: v0 v1 v2 v3` line
/// per square.
QuadDisk parse_complex(std::string_view text);

/// Dispatches on the `quadcomplex` header.
QuadDisk parse_disk(std::string_view text);
QuadDisk read_disk_file(const std::string& path);

std::string write_complex(const QuadDisk& disk);

/// ASCII rendering of a board via its developing map. Throws InputError for
/// disks that are not boards.
std::string render_board(const QuadDisk& disk);

}  // namespace quadfactor
