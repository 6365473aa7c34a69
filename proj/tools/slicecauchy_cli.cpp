// Command-line surface for the slice-regular Cauchy integral toolkit:
// exact identity suites, family printing, monogenic decomposition, and
// boundary-integral reconstruction with machine-readable reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicecauchy/slicecauchy.hpp"

using nlohmann::json;
using namespace slicecauchy;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file " + out_path);
  os << text << std::endl;
}

json report_json(const ReconstructionReport& r) {
  return {{"value", format_quat(r.value)},
          {"reference", format_quat(r.reference)},
          {"abs_err", r.abs_err},
          {"rel_err", r.rel_err},
          {"deriv", r.deriv},
          {"order", r.order},
          {"node_count", r.node_count},
          {"runtime_ms", r.runtime_ms}};
}

std::string report_csv_header() {
  return "value,reference,abs_err,rel_err,deriv,order,node_count,runtime_ms";
}

std::string report_csv_row(const ReconstructionReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << '"' << format_quat(r.value) << "\",\"" << format_quat(r.reference) << "\"," << r.abs_err
     << ',' << r.rel_err << ',' << r.deriv << ',' << r.order << ',' << r.node_count << ','
     << r.runtime_ms;
  return os.str();
}

std::vector<int> parse_orders(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice-regular function toolkit: Fueter families, monogenic "
               "decomposition, and Cauchy-type boundary-integral reconstruction"};
  app.require_subcommand(1);

  std::string f_spec, surface_spec, x_text, format = "json", out_path, orders_text = "8,16,32,48";
  int deriv = 0, order = 48, n_index = 0;
  unsigned seed = 0;
  bool probe_outside = false, tamper_p1 = false;

  auto* cmd_identities = app.add_subcommand("identities", "run the exact identity suite");
  cmd_identities->add_option("--seed", seed, "seed for the sampled checks");
  cmd_identities->add_option("--out", out_path, "write the report to a file");
  cmd_identities->add_flag("--tamper-p1", tamper_p1, "fault-injection hook")->group("");

  auto* cmd_pn = app.add_subcommand("pn", "print the exact form of P_n");
  cmd_pn->add_option("--n", n_index, "index")->required();
  cmd_pn->add_option("--out", out_path, "write to a file");

  auto* cmd_zn = app.add_subcommand("zn", "print the exact form of Z_n");
  cmd_zn->add_option("--n", n_index, "index (nonnegative)")->required();
  cmd_zn->add_option("--out", out_path, "write to a file");

  auto* cmd_decompose =
      app.add_subcommand("decompose", "monogenic decomposition of a polynomial");
  cmd_decompose->add_option("--poly,--f", f_spec, "function spec, {\"poly\":[...]}")->required();
  cmd_decompose->add_option("--out", out_path, "write to a file");

  auto add_cauchy_opts = [&](CLI::App* c) {
    c->add_option("--f", f_spec, "function spec")->required();
    c->add_option("--surface", surface_spec, "surface spec")->required();
    c->add_option("--x", x_text, "evaluation point, w,x,y,z")->required();
    c->add_option("--deriv", deriv, "slice-derivative order (default 0)");
    c->add_option("--format", format, "json|csv");
    c->add_option("--out", out_path, "write the report to a file");
    c->add_option("--seed", seed, "seed (reserved for sampled diagnostics)");
    c->add_flag("--probe-outside", probe_outside, "x lies outside; expected value 0");
  };
  auto* cmd_cauchy = app.add_subcommand("cauchy", "boundary-integral reconstruction at x");
  add_cauchy_opts(cmd_cauchy);
  cmd_cauchy->add_option("--order", order, "quadrature order");
  auto* cmd_sweep = app.add_subcommand("sweep", "reconstruction over a list of orders");
  add_cauchy_opts(cmd_sweep);
  cmd_sweep->add_option("--orders", orders_text, "comma-separated quadrature orders");

  CLI11_PARSE(app, argc, argv);

  FueterFamily fam;
  try {
    if (cmd_identities->parsed()) {
      auto results = run_identities(fam, seed, tamper_p1);
      json rep = {{"command", "identities"}, {"seed", seed}};
      bool all = true;
      json items = json::array();
      for (const auto& r : results) {
        items.push_back({{"name", r.name}, {"range", r.range}, {"pass", r.pass}});
        all = all && r.pass;
      }
      rep["identities"] = items;
      rep["all_pass"] = all;
      emit(rep.dump(2), out_path);
      return all ? 0 : 1;
    }

    if (cmd_pn->parsed()) {
      emit(fam.p_rational(n_index).str(), out_path);
      return 0;
    }
    if (cmd_zn->parsed()) {
      emit(fam.zonal(n_index).str(), out_path);
      return 0;
    }

    if (cmd_decompose->parsed()) {
      SliceFn f = parse_function_spec(f_spec);
      if (f.kind() != SliceFn::Kind::Poly)
        throw std::invalid_argument("decompose: expected a polynomial spec");
      MonogenicPair pair = decompose_poly(f.as_poly());
      json rep = {{"command", "decompose"}, {"config", json::parse(f_spec)}};
      json q1 = json::array(), q2 = json::array();
      json q1_expanded = json::array(), q2_expanded = json::array();
      for (std::size_t n = 0; n < pair.q1.size(); ++n) {
        q1.push_back(format_quat(pair.q1[n]));
        q1_expanded.push_back(
            fam.p_poly(int(n)).scale_right(QuatQ::from(pair.q1[n])).str());
      }
      for (std::size_t n = 0; n < pair.q2.size(); ++n) {
        q2.push_back(format_quat(pair.q2[n]));
        q2_expanded.push_back(
            fam.p_poly(int(n)).scale_right(QuatQ::from(pair.q2[n])).str());
      }
      rep["q1_p_basis"] = q1;
      rep["q2_p_basis"] = q2;
      rep["q1_terms"] = q1_expanded;
      rep["q2_terms"] = q2_expanded;
      emit(rep.dump(2), out_path);
      return 0;
    }

    // cauchy / sweep
    SliceFn f = parse_function_spec(f_spec);
    Surface s = parse_surface_spec(surface_spec);
    Quat x = parse_quat(x_text);
    std::vector<ReconstructionReport> reports;
    std::string command;
    if (cmd_cauchy->parsed()) {
      command = "cauchy";
      reports.push_back(reconstruct(fam, f, s, x, deriv, order, probe_outside));
    } else {
      command = "sweep";
      reports = convergence_sweep(fam, f, s, x, deriv, parse_orders(orders_text), probe_outside);
    }
    json config = {{"f", json::parse(f_spec)},
                   {"surface", json::parse(surface_spec)},
                   {"x", x_text},
                   {"deriv", deriv},
                   {"probe_outside", probe_outside},
                   {"seed", seed}};
    if (format == "json") {
      json rep = {{"command", command}, {"config", config}};
      if (command == "cauchy") {
        rep.update(report_json(reports[0]));
      } else {
        json rows = json::array();
        for (const auto& r : reports) rows.push_back(report_json(r));
        rep["reports"] = rows;
      }
      emit(rep.dump(2), out_path);
    } else if (format == "csv") {
      std::ostringstream os;
      os << report_csv_header();
      for (const auto& r : reports) os << '\n' << report_csv_row(r);
      emit(os.str(), out_path);
    } else {
      throw std::invalid_argument("unknown format '" + format + "'");
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
