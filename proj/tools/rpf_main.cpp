// Command-line front end for the relative probability library.
//
// Exit codes: 0 success, 1 domain or axiom error, 2 parse or usage error,
// 3 non-convergence of a limit.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "rpf/rpf.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

rpf::Document load_document(const std::string& path) {
  return rpf::parse_document(read_input(path));
}

// Commands that operate on the table accept either form.
rpf::DenseRpf load_dense(const std::string& path) {
  const rpf::Document doc = load_document(path);
  if (std::holds_alternative<rpf::DenseRpf>(doc)) return std::get<rpf::DenseRpf>(doc);
  return rpf::to_dense(std::get<rpf::ClassedRpf>(doc));
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError(std::string(what) + " must be an integer, got '" + text + "'");
  return value;
}

double parse_double(const std::string& text, const char* what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw UsageError(std::string(what) + " must be a number, got '" + text + "'");
  return value;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(parse_int(token, what));
  return values;
}

rpf::Event parse_event(const std::string& text) {
  return rpf::Event(parse_int_list(text, "event member"));
}

// Probabilities print with the fewest digits that stay within the
// library-wide tolerance of the computed value.
std::string render_double(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::fabs(std::strtod(buf, nullptr) - v) <= 1e-9) break;
  }
  return buf;
}

void print_table(const rpf::DenseRpf& p) {
  if (p.size() == 0) {
    std::cout << "(empty)\n";
    return;
  }
  std::vector<std::string> cells;
  size_t width = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      cells.push_back(rpf::render(p(i, j)));
      width = std::max(width, cells.back().size());
    }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      const std::string& cell = cells[static_cast<size_t>(i) * p.size() + j];
      std::cout << (j ? "  " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    std::cout << '\n';
  }
}

std::string join_ints(const std::vector<int>& values, const char* sep = " ") {
  std::string out;
  for (size_t m = 0; m < values.size(); ++m) {
    if (m) out += sep;
    out += std::to_string(values[m]);
  }
  return out;
}

void print_classification(const rpf::ClassificationReport& r, int k, bool as_json) {
  if (as_json) {
    nlohmann::json doc;
    doc["k"] = k;
    doc["totallyComparable"] = r.totally_comparable;
    doc["anchored"] = r.anchored;
    doc["anchors"] = r.anchors;
    doc["totallyMutuallyPossible"] = r.totally_mutually_possible;
    doc["classes"] = r.classes;
    nlohmann::json dag = nlohmann::json::array();
    for (const auto& [c1, c2] : r.class_dag) dag.push_back({c1, c2});
    doc["classDag"] = dag;
    std::cout << doc.dump() << '\n';
    return;
  }
  std::cout << "k: " << k << '\n';
  std::cout << "totally-comparable: " << (r.totally_comparable ? "true" : "false") << '\n';
  std::cout << "anchored: " << (r.anchored ? "true" : "false") << '\n';
  std::cout << "anchors: " << join_ints(r.anchors) << '\n';
  std::cout << "totally-mutually-possible: " << (r.totally_mutually_possible ? "true" : "false")
            << '\n';
  std::cout << "classes:";
  for (const auto& block : r.classes) std::cout << " {" << join_ints(block, ",") << "}";
  std::cout << '\n';
  std::cout << "class-dag:";
  for (const auto& [c1, c2] : r.class_dag) std::cout << ' ' << c1 << '>' << c2;
  std::cout << '\n';
}

rpf::DenseRpf make_catalog(const std::string& name, const std::vector<std::string>& args) {
  const auto want = [&](size_t n) {
    if (args.size() != n)
      throw UsageError("catalog " + name + " takes " + std::to_string(n) + " argument(s)");
  };
  if (name == "uniform") {
    want(1);
    return rpf::uniform(parse_int(args[0], "k"));
  }
  if (name == "indeterminate") {
    want(1);
    return rpf::indeterminate(parse_int(args[0], "k"));
  }
  if (name == "certain") {
    want(2);
    return rpf::certain(parse_int(args[0], "k"), parse_int(args[1], "c"));
  }
  if (name == "empty") {
    want(0);
    return rpf::empty();
  }
  if (name == "unit") {
    want(0);
    return rpf::unit();
  }
  if (name == "geometric") {
    want(2);
    return rpf::finite_geometric(parse_int(args[0], "k"), rpf::parse_magnitude(args[1]));
  }
  if (name == "binomial") {
    want(2);
    return rpf::binomial(parse_int(args[0], "n"), parse_double(args[1], "p"));
  }
  if (name == "from-absolute") {
    std::vector<double> probs;
    probs.reserve(args.size());
    for (const std::string& arg : args) probs.push_back(parse_double(arg, "probability"));
    return rpf::from_absolute(probs);
  }
  throw UsageError("unknown catalog entry '" + name + "'");
}

rpf::DenseRpf named_family_limit(const std::string& family, int steps) {
  if (family == "abs-lose-info")
    return rpf::family_limit(
        [](double eps) {
          return rpf::from_absolute({1.0 - eps, 2.0 / 3.0 * eps, 1.0 / 3.0 * eps});
        },
        steps);
  throw UsageError("unknown family '" + family + "' (available: abs-lose-info)");
}

int run(int argc, char** argv) {
  CLI::App app{"relative probability functions on finite outcome spaces"};
  app.require_subcommand(1);

  // validate
  std::string validate_file;
  CLI::App* validate_cmd = app.add_subcommand("validate", "check a document against the axioms");
  validate_cmd->add_option("file", validate_file, "document or - for stdin")->required();

  // classify
  std::string classify_file;
  bool classify_json = false;
  CLI::App* classify_cmd = app.add_subcommand("classify", "report structure flags and classes");
  classify_cmd->add_option("file", classify_file)->required();
  classify_cmd->add_flag("--json", classify_json, "machine-readable report");

  // show
  std::string show_file;
  CLI::App* show_cmd = app.add_subcommand("show", "print the table of pairwise values");
  show_cmd->add_option("file", show_file)->required();

  // convert
  std::string convert_file;
  std::string convert_to;
  CLI::App* convert_cmd = app.add_subcommand("convert", "switch between dense and classed form");
  convert_cmd->add_option("file", convert_file)->required();
  convert_cmd->add_option("--to", convert_to, "dense or classed")->required();

  // catalog
  std::string catalog_name;
  std::vector<std::string> catalog_args;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "emit a distribution from the catalog");
  catalog_cmd->add_option("name", catalog_name,
                          "uniform | indeterminate | certain | empty | unit | geometric | "
                          "binomial | from-absolute")
      ->required();
  catalog_cmd->add_option("args", catalog_args, "constructor arguments");

  // query
  std::string query_file;
  std::vector<int> query_outcomes;
  std::vector<std::string> query_events;
  bool query_json = false;
  CLI::App* query_cmd = app.add_subcommand("query", "relative probability of outcomes or events");
  query_cmd->add_option("file", query_file)->required();
  query_cmd->add_option("--outcomes", query_outcomes, "two outcome indices")->expected(2);
  query_cmd->add_option("--events", query_events,
                        "two comma-separated index lists; empty string is the empty event")
      ->expected(2);
  query_cmd->add_flag("--json", query_json);

  // to-absolute
  std::string absolute_file;
  CLI::App* absolute_cmd =
      app.add_subcommand("to-absolute", "matching absolute distribution of an anchored RPF");
  absolute_cmd->add_option("file", absolute_file)->required();

  // compose
  std::vector<std::string> compose_files;
  CLI::App* compose_cmd =
      app.add_subcommand("compose", "compose component RPFs under a top-level RPF");
  compose_cmd->add_option("files", compose_files, "TOP COMPONENT...")->expected(-2);

  // bayes
  std::vector<std::string> bayes_files;
  CLI::App* bayes_cmd = app.add_subcommand("bayes", "posterior from a prior and likelihoods");
  bayes_cmd->add_option("files", bayes_files, "PRIOR LIKELIHOOD...")->expected(-2);

  // noisy-channel
  int channel_k = 0;
  double channel_p = 0.0;
  std::string channel_counts;
  CLI::App* channel_cmd =
      app.add_subcommand("noisy-channel", "likelihood RPF for repeated noisy messages");
  channel_cmd->add_option("--k", channel_k, "outcome count")->required();
  channel_cmd->add_option("--p", channel_p, "per-message success probability")->required();
  channel_cmd->add_option("--counts", channel_counts, "received counts c0,c1,...")->required();

  // limit
  std::vector<std::string> limit_files;
  std::string limit_family;
  int limit_steps = 40;
  CLI::App* limit_cmd = app.add_subcommand("limit", "elementwise limit of a sequence of RPFs");
  limit_cmd->add_option("files", limit_files, "sequence of documents");
  limit_cmd->add_option("--family", limit_family, "named family (abs-lose-info)");
  limit_cmd->add_option("--steps", limit_steps, "samples along eps = 2^-n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate_cmd) {
      try {
        load_document(validate_file);
      } catch (const rpf::ValidationError& err) {
        for (const std::string& line : err.problems) std::cout << line << '\n';
        return 1;
      }
      std::cout << "ok\n";
      return 0;
    }

    if (*classify_cmd) {
      const rpf::DenseRpf p = load_dense(classify_file);
      print_classification(rpf::classify(p), p.size(), classify_json);
      return 0;
    }

    if (*show_cmd) {
      print_table(load_dense(show_file));
      return 0;
    }

    if (*convert_cmd) {
      const rpf::Document doc = load_document(convert_file);
      if (convert_to == "dense") {
        std::cout << serialize_document(
            std::holds_alternative<rpf::DenseRpf>(doc)
                ? std::get<rpf::DenseRpf>(doc)
                : rpf::to_dense(std::get<rpf::ClassedRpf>(doc)));
      } else if (convert_to == "classed") {
        std::cout << serialize_document(
            std::holds_alternative<rpf::ClassedRpf>(doc)
                ? std::get<rpf::ClassedRpf>(doc)
                : rpf::to_classed(std::get<rpf::DenseRpf>(doc)));
      } else {
        throw UsageError("--to must be dense or classed");
      }
      return 0;
    }

    if (*catalog_cmd) {
      std::cout << serialize_document(make_catalog(catalog_name, catalog_args));
      return 0;
    }

    if (*query_cmd) {
      const rpf::DenseRpf p = load_dense(query_file);
      rpf::Magnitude value;
      if (!query_outcomes.empty() && query_events.empty())
        value = p(query_outcomes[0], query_outcomes[1]);
      else if (!query_events.empty() && query_outcomes.empty())
        value = rpf::event_rel_prob(p, parse_event(query_events[0]), parse_event(query_events[1]));
      else
        throw UsageError("query needs exactly one of --outcomes or --events");
      if (query_json)
        std::cout << nlohmann::json{{"value", rpf::render(value)}}.dump() << '\n';
      else
        std::cout << rpf::render(value) << '\n';
      return 0;
    }

    if (*absolute_cmd) {
      const rpf::AbsoluteDistribution d = rpf::to_absolute(load_dense(absolute_file));
      for (const double v : d.probs()) std::cout << render_double(v) << '\n';
      return 0;
    }

    if (*compose_cmd) {
      rpf::Composition c;
      c.top = load_dense(compose_files[0]);
      for (size_t m = 1; m < compose_files.size(); ++m)
        c.components.push_back(load_dense(compose_files[m]));
      const rpf::ComparabilityReport report = rpf::total_comparability_conditions(c);
      std::cerr << "total-comparability:"
                << " condition1=" << (report.condition1 ? "true" : "false")
                << " condition2=" << (report.condition2 ? "true" : "false")
                << " condition3=" << (report.condition3 ? "true" : "false") << '\n';
      if (!report.witness.empty()) std::cerr << "witness: " << report.witness << '\n';
      const rpf::ComposedRpf composed = rpf::compose(c);
      std::cerr << "offsets: " << join_ints(composed.offsets) << '\n';
      std::cout << serialize_document(composed.rpf);
      return 0;
    }

    if (*bayes_cmd) {
      rpf::DenseRpf posterior = load_dense(bayes_files[0]);
      if (!rpf::totally_mutually_possible(posterior))
        std::cerr << "warning: cromwell: prior is not totally mutually possible\n";
      for (size_t m = 1; m < bayes_files.size(); ++m)
        posterior = rpf::bayes_update(posterior, load_dense(bayes_files[m]));
      std::cout << serialize_document(posterior);
      return 0;
    }

    if (*channel_cmd) {
      std::cout << serialize_document(rpf::noisy_channel_likelihood(
          channel_k, channel_p, parse_int_list(channel_counts, "count")));
      return 0;
    }

    if (*limit_cmd) {
      rpf::DenseRpf limit;
      if (!limit_family.empty()) {
        if (!limit_files.empty())
          throw UsageError("limit takes either files or --family, not both");
        limit = named_family_limit(limit_family, limit_steps);
      } else {
        if (limit_files.size() < 2) throw UsageError("limit needs at least two documents");
        std::vector<rpf::DenseRpf> seq;
        seq.reserve(limit_files.size());
        for (const std::string& file : limit_files) seq.push_back(load_dense(file));
        limit = rpf::sequence_limit(seq);
      }
      std::cout << serialize_document(limit);
      return 0;
    }
  } catch (const UsageError& err) {
    std::cerr << "error: usage: " << err.what() << '\n';
    return 2;
  } catch (const rpf::ParseError& err) {
    std::cerr << "error: parse: " << err.what() << '\n';
    return 2;
  } catch (const rpf::ValidationError& err) {
    std::cerr << "error: axiom: " << err.what() << '\n';
    return 1;
  } catch (const rpf::NonConvergence& err) {
    std::cerr << "error: no-convergence: " << err.what() << '\n';
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: domain: " << err.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
