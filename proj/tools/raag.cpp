// Command-line front end for the piling calculus.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "raag/conjugacy.hpp"
#include "raag/extension.hpp"
#include "raag/growth.hpp"
#include "raag/io.hpp"
#include "raag/oracle.hpp"
#include "raag/piling.hpp"
#include "raag/twisted.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw raag::Error("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CommonOpts {
  std::string graph_path;
  std::string aut_path;
  bool as_json = false;
  bool certify = false;
  std::size_t budget = raag::default_twisted_budget;
  CLI::Option* budget_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_aut) {
  cmd->add_option("--graph", opts.graph_path, "defining graph JSON file")->required();
  if (with_aut) cmd->add_option("--aut", opts.aut_path, "automorphism JSON file");
  cmd->add_flag("--json", opts.as_json, "machine-readable output");
  cmd->add_flag("--certify", opts.certify, "attach a brute-force witness (small scale)");
  opts.budget_opt = cmd->add_option("--budget", opts.budget, "search node cap");
}

/// Largest witness-search bound whose candidate count stays small.
int certify_bound(int radix, long long cap = 2000000) {
  long long total = 1, power = 1;
  int bound = 0;
  while (bound < 8) {
    power *= radix;
    total += power;
    if (total > cap) break;
    ++bound;
  }
  return bound;
}

void emit_answer(const CommonOpts& opts, bool answer,
                 const std::optional<std::string>& witness, json stats) {
  if (opts.as_json) {
    json out;
    out["answer"] = answer;
    if (witness) out["witness"] = *witness;
    out["stats"] = std::move(stats);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << (answer ? "YES" : "NO") << "\n";
    if (witness) std::cout << "witness: " << *witness << "\n";
  }
}

json word_stats(const raag::Word& u, const raag::Word& v) {
  return json{{"length_u", u.size()}, {"length_v", v.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"piling calculus for right-angled Artin groups"};
  app.require_subcommand(1);

  CommonOpts normalize_opts, wp_opts, cp_opts, tcp_opts, extcp_opts, growth_opts;
  std::string normalize_word, wp_u, wp_v, cp_u, cp_v, tcp_u, tcp_v, ext_g, ext_h;
  int tcp_power = 1;
  int growth_max = 4;
  bool growth_ext = false;
  std::string growth_plot;

  CLI::App* normalize = app.add_subcommand("normalize", "print the normal form");
  add_common(normalize, normalize_opts, false);
  normalize->add_option("word", normalize_word, "input word")->required();

  CLI::App* wp = app.add_subcommand("wp", "word problem: u = v?");
  add_common(wp, wp_opts, false);
  wp->add_option("u", wp_u)->required();
  wp->add_option("v", wp_v)->required();

  CLI::App* cp = app.add_subcommand("cp", "conjugacy problem: u ~ v?");
  add_common(cp, cp_opts, false);
  cp->add_option("u", cp_u)->required();
  cp->add_option("v", cp_v)->required();

  CLI::App* tcp_cmd = app.add_subcommand("tcp", "twisted conjugacy under phi^k");
  add_common(tcp_cmd, tcp_opts, true);
  tcp_cmd->add_option("--power", tcp_power, "use phi^k (default 1)");
  tcp_cmd->add_option("u", tcp_u)->required();
  tcp_cmd->add_option("v", tcp_v)->required();

  CLI::App* extcp = app.add_subcommand("ext-cp", "conjugacy in the extension A_phi");
  add_common(extcp, extcp_opts, true);
  extcp->add_option("lhs", ext_g, "element \"<word> ; t^<k>\"")->required();
  extcp->add_option("rhs", ext_h, "element \"<word> ; t^<k>\"")->required();

  CLI::App* growth = app.add_subcommand("growth", "conjugacy growth table (CSV)");
  add_common(growth, growth_opts, true);
  growth->add_option("--max", growth_max, "maximal length")->required();
  growth->add_flag("--ext", growth_ext, "growth of the extension A_phi");
  growth->add_option("--plot", growth_plot, "also write a gnuplot data file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(normalize_opts.graph_path));
      raag::Word u = raag::parse_word(g, normalize_word);
      raag::Word normal = raag::extract_normal_word(raag::build_piling(u));
      if (normalize_opts.as_json) {
        std::cout << json{{"normal_form", raag::print_word(normal)},
                          {"stats",
                           {{"input_length", u.size()},
                            {"geodesic_length", normal.size()}}}}
                         .dump()
                  << "\n";
      } else {
        std::cout << raag::print_word(normal) << "\n";
      }
    } else if (*wp) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(wp_opts.graph_path));
      raag::Word u = raag::parse_word(g, wp_u), v = raag::parse_word(g, wp_v);
      bool answer = raag::piling_equal(raag::build_piling(u), raag::build_piling(v));
      emit_answer(wp_opts, answer, std::nullopt, word_stats(u, v));
    } else if (*cp) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(cp_opts.graph_path));
      raag::Word u = raag::parse_word(g, cp_u), v = raag::parse_word(g, cp_v);
      bool answer = raag::conjugate(u, v);
      std::optional<std::string> witness;
      if (cp_opts.certify) {
        int bound = certify_bound(2 * g.size());
        auto found = raag::oracle::oracle_conjugate(u, v, bound);
        witness = found ? raag::print_word(*found)
                        : "none up to bound " + std::to_string(bound);
      }
      emit_answer(cp_opts, answer, witness, word_stats(u, v));
    } else if (*tcp_cmd) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(tcp_opts.graph_path));
      if (tcp_opts.aut_path.empty())
        throw raag::Error("tcp needs --aut");
      raag::LengthPreservingAut phi_base =
          raag::aut_from_json(g, read_file(tcp_opts.aut_path));
      raag::LengthPreservingAut phi = phi_base.power(tcp_power);
      raag::Word u = raag::parse_word(g, tcp_u), v = raag::parse_word(g, tcp_v);
      bool answer = raag::tcp(u, v, phi, tcp_opts.budget);
      std::optional<std::string> witness;
      if (tcp_opts.certify) {
        int bound = certify_bound(2 * g.size());
        auto found = raag::oracle::oracle_twisted_conjugate(u, v, phi, bound);
        witness = found ? raag::print_word(*found)
                        : "none up to bound " + std::to_string(bound);
      }
      emit_answer(tcp_opts, answer, witness, word_stats(u, v));
    } else if (*extcp) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(extcp_opts.graph_path));
      if (extcp_opts.aut_path.empty())
        throw raag::Error("ext-cp needs --aut");
      raag::LengthPreservingAut phi =
          raag::aut_from_json(g, read_file(extcp_opts.aut_path));
      raag::ExtElement a = raag::parse_ext_element(phi, ext_g);
      raag::ExtElement b = raag::parse_ext_element(phi, ext_h);
      bool answer = raag::ext_conjugate(a, b, extcp_opts.budget);
      std::optional<std::string> witness;
      if (extcp_opts.certify) {
        auto ball = raag::ext_ball(phi, 4, 200000);
        for (const auto& [key, entry] : ball) {
          const raag::ExtElement& h = entry.first;
          if (raag::ext_equal(
                  raag::ext_multiply(raag::ext_multiply(raag::ext_inverse(h), a), h),
                  b)) {
            witness = raag::print_ext_element(h);
            break;
          }
        }
        if (!witness) witness = "none up to radius 4";
      }
      emit_answer(extcp_opts, answer, witness,
                  json{{"length_g", a.base.size()}, {"length_h", b.base.size()}});
    } else if (*growth) {
      raag::DefiningGraph g = raag::graph_from_json(read_file(growth_opts.graph_path));
      raag::GrowthBudget gb;
      if (growth_opts.budget_opt->count() > 0) gb.max_nodes = growth_opts.budget;
      raag::GrowthTable table;
      if (growth_ext) {
        if (growth_opts.aut_path.empty())
          throw raag::Error("growth --ext needs --aut");
        raag::LengthPreservingAut phi =
            raag::aut_from_json(g, read_file(growth_opts.aut_path));
        table = raag::ext_conj_growth(phi, growth_max, gb, growth_opts.budget);
      } else {
        table = raag_conj_growth(g, growth_max, gb);
      }
      if (growth_opts.as_json) {
        json rows = json::array();
        for (std::size_t n = 0; n < table.coefficients.size(); ++n)
          rows.push_back({n, table.coefficients[n]});
        std::cout << json{{"table", rows}, {"note", table.metric_note}}.dump() << "\n";
      } else {
        for (std::size_t n = 0; n < table.coefficients.size(); ++n)
          std::cout << n << "," << table.coefficients[n] << "\n";
      }
      if (!growth_plot.empty()) {
        std::ofstream out(growth_plot);
        if (!out) throw raag::Error("cannot write \"" + growth_plot + "\"");
        out << "# conjugacy growth coefficients c(n)\n";
        out << "# " << table.metric_note << "\n";
        out << "# finite empirical table; says nothing about the nature of the"
               " full series\n";
        for (std::size_t n = 0; n < table.coefficients.size(); ++n)
          out << n << " " << table.coefficients[n] << "\n";
      }
    }
  } catch (const raag::ResourceExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const raag::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const raag::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const raag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
