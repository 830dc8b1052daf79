#include "supercong/cli/report_io.hpp"

#include <charconv>
#include <stdexcept>

namespace supercong::cli {

using nlohmann::json;

namespace {

Residue parse_residue(const std::string& s) {
  Residue v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad residue: " + s);
  return v;
}

json totals_to_json(const Totals& t) {
  return {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}, {"instances", t.instances()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string params_text(const std::vector<std::int64_t>& params, char sep) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(params[i]);
  }
  return s;
}

void instance_line(const InstanceResult& r, std::ostream& out) {
  out << "  p=" << r.p;
  if (!r.params.empty()) out << " params=" << params_text(r.params, ',');
  out << ' ' << status_name(r.outcome.status);
  if (r.outcome.lhs) out << " lhs=" << *r.outcome.lhs;
  if (r.outcome.rhs) out << " rhs=" << *r.outcome.rhs;
  if (const auto& w = r.outcome.witness) {
    out << " witness=" << w->target << "=" << w->a << "*" << w->x << "^2+" << w->b << "*" << w->y << "^2";
  }
  if (!r.outcome.reason.empty()) out << " (" << r.outcome.reason << ")";
  out << '\n';
}

}  // namespace

json report_to_json(const Report& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json item = {{"p", r.p}, {"params", r.params}, {"status", status_name(r.outcome.status)}};
    if (!r.outcome.reason.empty()) item["reason"] = r.outcome.reason;
    if (r.outcome.lhs) item["lhs"] = std::to_string(*r.outcome.lhs);
    if (r.outcome.rhs) item["rhs"] = std::to_string(*r.outcome.rhs);
    if (const auto& w = r.outcome.witness) {
      item["witness"] = {{"x", w->x}, {"y", w->y}, {"form", {w->a, w->b}}, {"target", w->target}};
    }
    results.push_back(std::move(item));
  }
  return {{"statement", report.statement},
          {"range", {report.lo, report.hi}},
          {"strategy", report.strategy},
          {"seed", report.seed},
          {"results", std::move(results)},
          {"totals", totals_to_json(report.totals)},
          {"duration_ms", report.duration_ms},
          {"version", report.version}};
}

Report report_from_json(const json& j) {
  Report report;
  report.statement = j.at("statement").get<std::string>();
  report.lo = j.at("range").at(0).get<std::uint32_t>();
  report.hi = j.at("range").at(1).get<std::uint32_t>();
  report.strategy = j.at("strategy").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& item : j.at("results")) {
    InstanceResult r;
    r.p = item.at("p").get<std::uint32_t>();
    r.params = item.at("params").get<std::vector<std::int64_t>>();
    const auto status = parse_status(item.at("status").get<std::string>());
    if (!status) throw std::invalid_argument("bad status in report");
    r.outcome.status = *status;
    if (item.contains("reason")) r.outcome.reason = item["reason"].get<std::string>();
    if (item.contains("lhs")) r.outcome.lhs = parse_residue(item["lhs"].get<std::string>());
    if (item.contains("rhs")) r.outcome.rhs = parse_residue(item["rhs"].get<std::string>());
    if (item.contains("witness")) {
      const json& w = item["witness"];
      r.outcome.witness = QuadFormWitness{w.at("form").at(0).get<std::uint64_t>(), w.at("form").at(1).get<std::uint64_t>(),
                                          w.at("x").get<std::uint64_t>(), w.at("y").get<std::uint64_t>(),
                                          w.at("target").get<std::uint64_t>()};
    }
    report.results.push_back(std::move(r));
  }
  const json& t = j.at("totals");
  report.totals = {t.at("pass").get<std::size_t>(), t.at("fail").get<std::size_t>(), t.at("skipped").get<std::size_t>()};
  report.duration_ms = j.at("duration_ms").get<std::uint64_t>();
  report.version = j.at("version").get<std::string>();
  return report;
}

void write_csv(const std::vector<Report>& reports, std::ostream& out) {
  out << "statement,p,params,status,reason,lhs,rhs,x,y,form_a,form_b\n";
  for (const auto& rep : reports) {
    for (const auto& r : rep.results) {
      const auto& o = r.outcome;
      out << csv_field(rep.statement) << ',' << r.p << ',' << params_text(r.params, ';') << ',' << status_name(o.status)
          << ',' << csv_field(o.reason) << ',' << (o.lhs ? std::to_string(*o.lhs) : "") << ','
          << (o.rhs ? std::to_string(*o.rhs) : "") << ',';
      if (o.witness) {
        out << o.witness->x << ',' << o.witness->y << ',' << o.witness->a << ',' << o.witness->b;
      } else {
        out << ",,,";
      }
      out << '\n';
    }
  }
}

void write_text(const std::vector<Report>& reports, int verbosity, std::ostream& out) {
  for (const auto& rep : reports) {
    out << rep.statement << " primes " << rep.lo << ".." << rep.hi << " params " << rep.strategy << " seed " << rep.seed
        << ": pass " << rep.totals.pass << ", fail " << rep.totals.fail << ", skipped " << rep.totals.skipped << " ("
        << rep.duration_ms << " ms)\n";
    for (const auto& r : rep.results) {
      if (verbosity >= 2 || r.outcome.status == Status::fail) instance_line(r, out);
    }
  }
}

}  // namespace supercong::cli
