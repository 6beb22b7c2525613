#include "cheblab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cheblab/errors.hpp"

namespace cheblab::report {

namespace {

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.6f", v);
          return buf;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
        }
        return v;
      },
      c);
}

std::string render_csv(const Report& r) {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : r.tables) {
    if (!first) out << '\n';
    first = false;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << '\n';
    }
  }
  if (r.summary) {
    out << r.summary->prefix;
    for (const auto& v : r.summary->values) out << ',' << csv_cell(v);
    out << '\n';
  }
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  if (!r.params.empty()) {
    auto& p = j["params"];
    for (const auto& [k, v] : r.params) p[k] = json_cell(v);
  }
  for (const auto& t : r.tables) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
      rows.push_back(std::move(obj));
    }
    j[t.name] = std::move(rows);
  }
  if (r.summary) {
    auto& s = j[r.summary->name];
    for (std::size_t i = 0; i < r.summary->fields.size(); ++i) s[r.summary->fields[i]] = json_cell(r.summary->values[i]);
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const Report& r, Format format) {
  return format == Format::Csv ? render_csv(r) : render_json(r);
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ArgumentError("cannot write to '" + path.string() + "'");
    f << contents;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ArgumentError("failed writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ArgumentError("cannot replace '" + path.string() + "'");
  }
}

void emit_report(const Report& r, Format format, const std::filesystem::path& path) {
  write_atomic(path, render(r, format));
}

std::string render_svg(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& title,
                       const std::string& x_label, const std::string& y_label) {
  constexpr double kW = 640, kH = 400, kPad = 50;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = 0.0, y1 = -x0;
  for (const double v : xs) x0 = std::min(x0, v), x1 = std::max(x1, v);
  for (const double v : ys) y1 = std::max(y1, v);
  if (xs.empty()) x0 = 0, x1 = 1;
  if (x1 <= x0) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;

  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  s << "<text x=\"15\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 15 " << kH / 2 << ")\" text-anchor=\"middle\">"
    << y_label << "</text>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad << "\" y2=\"" << kH - kPad
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\"" << kH - kPad
    << "\" stroke=\"black\"/>\n";
  s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    const double px = kPad + (xs[i] - x0) / (x1 - x0) * (kW - 2 * kPad);
    const double py = kH - kPad - (ys[i] - y0) / (y1 - y0) * (kH - 2 * kPad);
    s << (i ? " " : "") << px << "," << py;
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

Report from_bv(const bv::BVReport& rep) {
  Report r;
  r.kind = "bv";
  r.params = {{"context", rep.params.ctx.label()},
              {"class", rep.params.ctx.info(rep.params.cls).id},
              {"x", rep.params.x},
              {"delta", rep.params.delta},
              {"theta", rep.params.theta},
              {"D", rep.params.D},
              {"h", rep.h},
              {"Q", rep.Q},
              {"grid_N", static_cast<std::uint64_t>(rep.params.grid.n_N)},
              {"grid_y", static_cast<std::uint64_t>(rep.params.grid.n_y)}};
  Table t{"rows", {"q", "a_star", "N_star", "y_star", "observed", "main_term", "abs_error"}, {}};
  for (const auto& row : rep.rows) {
    t.rows.push_back({row.q, row.a_star, row.N_star, row.y_star, row.observed, row.main_term, row.abs_error});
  }
  r.tables.push_back(std::move(t));
  r.summary = Summary{"total",
                      "#TOTAL",
                      {"E", "normalized_ratio", "grh_comparator"},
                      {rep.total, rep.normalized_ratio, rep.grh_comparator}};
  return r;
}

Report from_bv_scan(const std::vector<bv::BVReport>& reps) {
  Report r;
  r.kind = "scan";
  if (!reps.empty()) {
    const auto& p = reps.front().params;
    r.params = {{"context", p.ctx.label()}, {"class", p.ctx.info(p.cls).id}, {"delta", p.delta},
                {"theta", p.theta},         {"D", p.D}};
  }
  Table t{"points", {"x", "h", "Q", "moduli", "E", "normalized_ratio", "grh_comparator"}, {}};
  for (const auto& rep : reps) {
    t.rows.push_back({rep.params.x, rep.h, rep.Q, static_cast<std::uint64_t>(rep.rows.size()), rep.total,
                      rep.normalized_ratio, rep.grh_comparator});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report from_clusters(const tuples::ClusterReport& rep) {
  Report r;
  r.kind = "clusters";
  std::string offsets;
  for (std::size_t i = 0; i < rep.offsets.size(); ++i) offsets += (i ? "," : "") + std::to_string(rep.offsets[i]);
  r.params = {{"source", rep.source},
              {"offsets", offsets},
              {"x", rep.x},
              {"h", rep.h},
              {"threshold", static_cast<std::uint64_t>(rep.threshold)}};
  Table matches{"matches", {"n", "count"}, {}};
  for (const auto& [n, c] : rep.matches) matches.rows.push_back({n, static_cast<std::uint64_t>(c)});
  Table hist{"histogram", {"count", "frequency"}, {}};
  for (std::size_t c = 0; c < rep.histogram.size(); ++c) {
    hist.rows.push_back({static_cast<std::uint64_t>(c), rep.histogram[c]});
  }
  r.tables.push_back(std::move(matches));
  r.tables.push_back(std::move(hist));
  return r;
}

Report from_disc(const modforms::DiscReport& rep) {
  Report r = from_clusters(rep.clusters);
  r.kind = "discs";
  r.params.emplace_back("q", rep.q);
  r.params.emplace_back("a", rep.a);
  r.params.emplace_back("coprime_filter", std::string(rep.coprime_filter ? "on" : "off"));
  r.params.emplace_back("label", rep.label);
  r.params.emplace_back("candidates", rep.candidates);
  r.params.emplace_back("proxy_positive", rep.proxy_positive);
  r.params.emplace_back("proxy_density", rep.proxy_density);
  return r;
}

Report from_hypothesis(const tuples::HypothesisReport& rep) {
  Report r;
  r.kind = "hypothesis";
  r.params = {{"window_size", rep.window_size}, {"q_max", rep.q_max}, {"B", rep.B}};
  Table t{"terms", {"term", "offset", "lhs", "count", "scale", "log_scale"}, {}};
  t.rows.push_back({std::string("i"), std::string(""), rep.term_i, rep.window_size, rep.scale_A, rep.log_scale_A});
  for (const auto& f : rep.term_ii) {
    t.rows.push_back({std::string("ii"), f.offset, f.lhs, f.prime_count, f.scale, f.log_scale});
  }
  t.rows.push_back({std::string("iii"), std::string(""), rep.term_iii, rep.window_size, 0.0, 0.0});
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace cheblab::report
