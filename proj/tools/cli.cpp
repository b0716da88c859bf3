#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "quadfactor/arithmetic.hpp"
#include "quadfactor/board_io.hpp"
#include "quadfactor/diagonals.hpp"
#include "quadfactor/enumerate.hpp"
#include "quadfactor/factorization.hpp"
#include "quadfactor/oracles.hpp"
#include "quadfactor/selftest.hpp"
#include "quadfactor/surgery.hpp"

namespace quadfactor {

namespace {

using nlohmann::json;

struct Settings {
  std::string file;
  bool first_white = false;
  bool no_verify = false;
  std::string format = "text";
  std::string corner;
  std::string side = "auto";
  std::string out_prefix;
  std::string rhs;
  std::size_t cells = 6;
  std::size_t threads = 0;
  bool count_only = false;
};

std::vector<std::int64_t> parse_integers(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("--rhs: not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InputError("--rhs: not an integer: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

VertexId vertex_named(const QuadDisk& disk, const std::string& name) {
  for (VertexId v = 0; v < disk.vertex_count(); ++v)
    if (disk.vertex_name(v) == name) return v;
  throw InputError("no vertex named '" + name + "'");
}

std::string square_list(std::span<const SquareId> squares) {
  std::string s;
  for (SquareId q : squares) s += (s.empty() ? "" : " ") + std::to_string(q);
  return s;
}

template <typename T>
std::string index_list(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Bicoloring coloring_for(const QuadDisk& disk, const Settings& s) {
  return bicolor(disk, s.first_white ? Color::white : Color::black);
}

int cmd_validate(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const auto& c = disk.counts();
  out << "ok: " << c.squares << " squares, " << c.vertices << " vertices, " << c.edges << " edges; board "
      << (is_board(disk) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_info(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const auto& c = disk.counts();
  const Bicoloring coloring = coloring_for(disk, s);
  const bool board = is_board(disk);
  out << "squares " << c.squares << '\n'
      << "vertices " << c.vertices << " (interior " << c.interior_vertices << ", boundary " << c.vertices - c.interior_vertices << ")\n"
      << "edges " << c.edges << " (interior " << c.interior_edges << ", boundary " << c.boundary_edges << ")\n"
      << "black " << coloring.black_count() << '\n'
      << "white " << coloring.white_count() << '\n'
      << "corners " << c.corners() << '\n'
      << "boundary vertices by square count";
  for (std::size_t r = 1; r < c.boundary_by_squares.size(); ++r) out << ' ' << r << ':' << c.boundary_by_squares[r];
  out << '\n' << "board " << (board ? "yes" : "no") << '\n';
  if (board) out << render_board(disk);
  return kExitOk;
}

int cmd_diagonals(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const bool board = is_board(disk);
  std::vector<Diagonal> diagonals = all_diagonals(disk);
  if (board) {
    const auto map = develop(disk);
    for (auto& d : diagonals) mark_monotone_arcs(disk, map, d);
  }
  for (const auto& d : diagonals) {
    out << "corner " << disk.vertex_name(d.corner()) << " k=" << d.k() << ' ' << to_string(d.kind);
    if (board && d.excellent()) out << " excellent";
    out << " squares " << square_list(d.squares) << '\n';
  }
  const Diagonal chosen = select_diagonal(disk, board);
  out << "selected corner " << disk.vertex_name(chosen.corner()) << '\n';
  return kExitOk;
}

int cmd_cutpaste(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const Diagonal d = s.corner.empty() ? select_diagonal(disk) : trace_diagonal(disk, vertex_named(disk, s.corner));
  const SidePolicy policy = s.side == "left" ? SidePolicy::left : s.side == "right" ? SidePolicy::right : SidePolicy::automatic;
  const SurgeryPlan plan = plan_surgery(disk, d, policy);
  const SurgeryResult result = cut_and_paste(disk, plan);
  out << "diagonal corner " << disk.vertex_name(d.corner()) << " k=" << plan.k << " k'=" << plan.k_prime << ' '
      << to_string(d.kind) << " excised side " << to_string(plan.chosen) << '\n'
      << "removed squares " << square_list(plan.removed()) << '\n';
  auto names = [&](const std::vector<VertexId>& zigzag) {
    std::string s;
    for (VertexId v : zigzag) s += ' ' + disk.vertex_name(v);
    return s;
  };
  out << "zigzag left" << names(plan.zigzag_left) << '\n'
      << "zigzag left+" << names(plan.zigzag_left_plus) << '\n'
      << "zigzag right" << names(plan.zigzag_right) << '\n'
      << "components " << result.components.size() << '\n';
  for (std::size_t c = 0; c < result.components.size(); ++c) {
    const QuadDisk& comp = result.components[c];
    const std::string text = write_complex(comp);
    out << "component " << c << ": " << comp.square_count() << " squares from " << square_list(result.component_squares[c])
        << '\n'
        << text;
    if (!s.out_prefix.empty()) {
      const std::string path = s.out_prefix + std::to_string(c) + ".txt";
      std::ofstream file(path, std::ios::binary);
      if (!(file << text)) throw InputError("cannot write " + path);
    }
  }
  return kExitOk;
}

int cmd_factor(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const Bicoloring coloring = coloring_for(disk, s);
  const IntMatrix b = black_to_white_matrix(disk, coloring);
  const LDUFactorization f = ldu(disk, coloring, !s.no_verify);
  const bool square = b.rows() == b.cols();

  if (s.format == "json") {
    json doc;
    doc["black"] = b.rows();
    doc["white"] = b.cols();
    doc["rank"] = rank_via_ldu(f);
    doc["det"] = square ? json(det_via_ldu(f)) : json(nullptr);
    doc["black_squares"] = std::vector<SquareId>(coloring.squares_of(Color::black).begin(), coloring.squares_of(Color::black).end());
    doc["white_squares"] = std::vector<SquareId>(coloring.squares_of(Color::white).begin(), coloring.squares_of(Color::white).end());
    doc["black_order"] = f.black_order;
    doc["white_order"] = f.white_order;
    doc["B"] = b.to_rows();
    doc["L"] = f.lower.to_rows();
    doc["D"] = f.defective.to_rows();
    doc["U"] = f.upper.to_rows();
    out << doc.dump() << '\n';
    return kExitOk;
  }
  out << "black " << b.rows() << " white " << b.cols() << " rank " << rank_via_ldu(f) << '\n';
  if (square) out << "det " << det_via_ldu(f) << '\n';
  out << "black squares " << square_list(coloring.squares_of(Color::black)) << '\n'
      << "white squares " << square_list(coloring.squares_of(Color::white)) << '\n'
      << "black order " << index_list(f.black_order) << '\n'
      << "white order " << index_list(f.white_order) << '\n'
      << "B\n" << b << "L\n" << f.lower << "D\n" << f.defective << "U\n" << f.upper;
  return kExitOk;
}

int cmd_det(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const Bicoloring coloring = coloring_for(disk, s);
  if (coloring.black_count() != coloring.white_count())
    throw InputError("det: " + std::to_string(coloring.black_count()) + " black and " + std::to_string(coloring.white_count()) +
                     " white squares");
  out << det_via_ldu(ldu(disk, coloring, !s.no_verify)) << '\n';
  return kExitOk;
}

int cmd_rank(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  out << rank_via_ldu(ldu(disk, coloring_for(disk, s), !s.no_verify)) << '\n';
  return kExitOk;
}

int cmd_solve(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const Bicoloring coloring = coloring_for(disk, s);
  const auto v = parse_integers(s.rhs);
  if (v.size() != coloring.black_count())
    throw InputError("--rhs needs " + std::to_string(coloring.black_count()) + " entries, one per black square");
  const auto outcome = solve_integer(ldu(disk, coloring, !s.no_verify), v);
  if (outcome.solvable()) {
    out << "x " << index_list(outcome.solution()) << '\n';
  } else {
    out << "no solution: factor row " << outcome.certificate().row << " has value " << outcome.certificate().value
        << " against a zero row of D\n";
  }
  return kExitOk;
}

int cmd_oracle(const Settings& s, std::ostream& out) {
  const QuadDisk disk = read_disk_file(s.file);
  const Bicoloring coloring = coloring_for(disk, s);
  const IntMatrix b = black_to_white_matrix(disk, coloring);
  const LDUFactorization f = ldu(disk, coloring, false);
  bool ok = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail) {
    out << (pass ? "ok   " : "FAIL ") << name << ' ' << detail << '\n';
    ok = ok && pass;
  };

  const auto verdict = verify_factorization(b, f);
  line("verify", static_cast<bool>(verdict), to_string(verdict.failure));
  const std::size_t r = rank_via_ldu(f), q = rank_oracle(b), p2 = rank_oracle(b, 2), p3 = rank_oracle(b, 3);
  line("rank", r == q && q == p2 && q == p3,
       "ldu=" + std::to_string(r) + " Q=" + std::to_string(q) + " GF2=" + std::to_string(p2) + " GF3=" + std::to_string(p3));
  const auto snf = smith_normal_form(b);
  line("smith", snf.all_ones(), "factors " + index_list(snf.factors));
  if (b.rows() == b.cols()) {
    const std::int64_t d = det_via_ldu(f), e = det_oracle(b);
    std::string detail = "ldu=" + std::to_string(d) + " elimination=" + std::to_string(e);
    bool pass = d == e && d >= -1 && d <= 1;
    if (b.rows() <= kMaxMatchingSize) {
      const std::int64_t m = signed_matchings(b);
      detail += " matchings=" + std::to_string(m);
      pass = pass && m == d;
    }
    line("det", pass, detail);
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  const auto boards = enumerate_boards(s.cells);
  if (s.count_only) {
    out << boards.size() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < boards.size(); ++i) out << (i ? "\n" : "") << boards[i].text();
  return kExitOk;
}

int cmd_selftest(const Settings& s, std::ostream& out) {
  SelftestOptions options;
  options.max_cells = s.cells;
  options.threads = s.threads;
  const auto report = selftest(options);
  out << report.text();
  return report.failures() == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact L D U factorization of black-to-white matrices of quadriculated disks"};
  app.name("quadfactor");
  app.require_subcommand(1);
  Settings s;

  auto file_command = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", s.file, "board or quadcomplex file")->required();
    return sub;
  };
  auto colour_flags = [&](CLI::App* sub) {
    sub->add_flag("--first-white", s.first_white, "colour square 0 white instead of black");
    sub->add_flag("--no-verify", s.no_verify, "skip exact verification of each recursion step");
  };

  auto* validate = file_command("validate", "check that the input is a quadriculated disk");
  auto* info = file_command("info", "counts, colouring and board status");
  colour_flags(info);
  auto* diagonals = file_command("diagonals", "list diagonals and the one the factorization uses");
  auto* cutpaste = file_command("cutpaste", "cut and paste along a diagonal");
  cutpaste->add_option("--corner", s.corner, "start corner by vertex name (default: selected diagonal)");
  cutpaste->add_option("--side", s.side, "side excised with the diagonal")->check(CLI::IsMember({"auto", "left", "right"}));
  cutpaste->add_option("--out", s.out_prefix, "also write component i to <prefix><i>.txt");
  auto* factor = file_command("factor", "print B with its L D U factorization");
  factor->add_option("--format", s.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  colour_flags(factor);
  auto* det = file_command("det", "determinant (equal black and white counts)");
  colour_flags(det);
  auto* rank = file_command("rank", "rank of B");
  colour_flags(rank);
  auto* solve = file_command("solve", "integer solution of B x = v");
  solve->add_option("--rhs", s.rhs, "comma-separated integers, one per black square")->required();
  colour_flags(solve);
  auto* oracle = file_command("oracle", "cross-check the factorization against brute-force oracles");
  oracle->add_flag("--first-white", s.first_white, "colour square 0 white instead of black");
  auto* enumerate = app.add_subcommand("enumerate", "list hole-free polyominoes with exactly N cells");
  enumerate->add_option("cells", s.cells, "N, 1..10")->required();
  enumerate->add_flag("--count", s.count_only, "print only the number of boards");
  auto* self = app.add_subcommand("selftest", "run every invariant over all boards with at most N cells");
  self->add_option("cells", s.cells, "N, 1..10 (default 6)");
  self->add_option("--threads", s.threads, "worker count (default: hardware, capped by QUADFACTOR_THREADS)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(s, out);
    if (*info) return cmd_info(s, out);
    if (*diagonals) return cmd_diagonals(s, out);
    if (*cutpaste) return cmd_cutpaste(s, out);
    if (*factor) return cmd_factor(s, out);
    if (*det) return cmd_det(s, out);
    if (*rank) return cmd_rank(s, out);
    if (*solve) return cmd_solve(s, out);
    if (*oracle) return cmd_oracle(s, out);
    if (*enumerate) return cmd_enumerate(s, out);
    if (*self) return cmd_selftest(s, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInput;
}

}  // namespace quadfactor
