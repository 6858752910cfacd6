// ddgraph: construct, analyze, verify and search degree/diameter graphs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddg/cayley.hpp"
#include "ddg/constructions.hpp"
#include "ddg/error.hpp"
#include "ddg/graph.hpp"
#include "ddg/metrics.hpp"
#include "ddg/records.hpp"
#include "ddg/search.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void write_graph(const ddg::CompactGraph &g, const std::string &out) {
  if (out.empty() || out == "-")
    ddg::write_adjacency(std::cout, g);
  else
    ddg::write_adjacency_file(out, g);
}

void print_stats(const ddg::GraphStats &s) {
  std::cout << "order " << s.order << '\n'
            << "edges " << s.size << '\n'
            << "min_degree " << s.min_degree << '\n'
            << "max_degree " << s.max_degree << '\n'
            << "regular " << (s.is_regular ? "yes" : "no") << '\n'
            << "connected " << (s.connected ? "yes" : "no") << '\n'
            << "bipartite " << (s.bipartite ? "yes" : "no") << '\n';
  if (s.diameter)
    std::cout << "diameter " << *s.diameter << '\n';
  else
    std::cout << "diameter inf (vertex " << s.unreached_witness.value_or(0) << " unreached)\n";
  std::cout << "girth " << (s.girth ? std::to_string(*s.girth) : std::string("inf")) << '\n';
  if (s.average_distance)
    std::cout << "average_distance " << s.average_distance->to_decimal(6) << " ("
              << s.average_distance->to_string() << ")\n";
  else
    std::cout << "average_distance -\n";
}

template <class Group>
void print_cayley_summary(const Group &group, const ddg::ConnectionSet &conn) {
  const auto bfs = ddg::cayley_bfs(group, conn);
  std::cerr << "order " << group.order() << '\n'
            << "degree " << conn.degree() << '\n'
            << "involutions " << conn.involutions.size() << '\n'
            << "reached " << bfs.reached << '\n';
  if (bfs.reached == group.order()) {
    std::cerr << "diameter " << bfs.diameter << '\n';
    const ddg::Rational avg = ddg::Rational::make(bfs.distance_sum(), group.order() - 1);
    if (group.order() > 1)
      std::cerr << "average_distance " << avg.to_decimal(6) << '\n';
  } else {
    std::cerr << "diameter inf (generators do not generate the group)\n";
  }
}

bool parse_range(const std::string &text, std::uint32_t &lo, std::uint32_t &hi) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = static_cast<std::uint32_t>(std::stoul(text));
    } else {
      lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, colon)));
      hi = static_cast<std::uint32_t>(std::stoul(text.substr(colon + 1)));
    }
  } catch (const std::exception &) {
    return false;
  }
  return true;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Large graphs of given maximum degree and diameter"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // moore
  auto *moore = app.add_subcommand("moore", "Moore bound for maximum degree and diameter");
  std::uint32_t moore_delta = 0, moore_d = 0;
  moore->add_option("delta", moore_delta, "maximum degree (>= 2)")->required();
  moore->add_option("diameter", moore_d, "diameter (>= 1)")->required();
  moore->callback([&] { std::cout << ddg::moore_bound(moore_delta, moore_d) << '\n'; });

  // stats
  auto *stats_cmd = app.add_subcommand("stats", "Order, degrees, diameter, girth, average distance");
  std::string stats_in;
  bool stats_vt = false;
  unsigned jobs = 0;
  stats_cmd->add_option("--in", stats_in, "adjacency file")->required();
  stats_cmd->add_flag("--vertex-transitive", stats_vt, "diameter from vertex 0 only");
  stats_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  stats_cmd->callback([&] {
    const auto g = ddg::read_adjacency_file(stats_in);
    if (stats_vt) {
      std::cout << "order " << g.order() << "\ndiameter "
                << ddg::diameter(g, true, {jobs}) << '\n';
      return;
    }
    print_stats(ddg::stats(g, {jobs}));
  });

  // construct-sd / construct-2c
  std::vector<std::string> job_tokens;
  std::string construct_out;
  bool summary_only = false;
  auto *csd = app.add_subcommand("construct-sd", "Cayley graph of Z_M x|_A Z_N: M A N gen x,y gen x,y ...");
  csd->add_option("job", job_tokens, "M A N gen x,y ...")->required()->expected(-1);
  csd->add_option("--out", construct_out, "adjacency output file ('-' = stdout)");
  csd->add_flag("--summary-only", summary_only, "implicit BFS only, no graph output");
  csd->callback([&] {
    const auto job = ddg::parse_sd_job(job_tokens);
    const auto group = ddg::SemidirectGroup::validate(job.spec);
    const auto conn = ddg::close_connection_set(group, ddg::encode_generators(group, job.generators));
    print_cayley_summary(group, conn);
    if (!summary_only)
      write_graph(ddg::build_cayley_explicit(group, conn), construct_out);
  });

  auto *c2c = app.add_subcommand("construct-2c", "Cayley graph of (Z_m x Z_m) x| Z_2: m gen a,b,c ...");
  c2c->add_option("job", job_tokens, "m gen a,b,c ...")->required()->expected(-1);
  c2c->add_option("--out", construct_out, "adjacency output file ('-' = stdout)");
  c2c->add_flag("--summary-only", summary_only, "implicit BFS only, no graph output");
  c2c->callback([&] {
    const auto job = ddg::parse_two_coord_job(job_tokens);
    const ddg::TwoCoordGroup group(job.m);
    const auto conn = ddg::close_connection_set(group, ddg::encode_generators(group, job.generators));
    print_cayley_summary(group, conn);
    if (!summary_only)
      write_graph(ddg::build_cayley_explicit(group, conn), construct_out);
  });

  // construct-lcf
  auto *lcf = app.add_subcommand("construct-lcf", "Cubic graph from LCF notation");
  std::vector<int> shifts;
  std::size_t repeats = 1;
  lcf->add_option("--shifts", shifts, "comma-separated chord offsets")->required()->delimiter(',');
  lcf->add_option("--repeats", repeats, "repetitions of the shift sequence")->required();
  lcf->add_option("--out", construct_out, "adjacency output file ('-' = stdout)");
  lcf->callback([&] { write_graph(ddg::lcf_graph(shifts, repeats), construct_out); });

  // chen
  auto *chen = app.add_subcommand("chen", "Vertex/edge graph of a host and a complete edge pairing");
  std::string host_file, pairing_file;
  bool chen_stats = false;
  chen->add_option("--host", host_file, "host adjacency file (default: Foster graph)");
  chen->add_option("--pairing", pairing_file, "pairing file")->required();
  chen->add_option("--out", construct_out, "adjacency output file ('-' = stdout)");
  chen->add_flag("--stats", chen_stats, "print statistics instead of the graph");
  chen->callback([&] {
    const auto host = host_file.empty() ? ddg::foster_graph() : ddg::read_adjacency_file(host_file);
    std::size_t declared = 0;
    const auto pairs = ddg::read_pairing_file(pairing_file, &declared);
    if (declared != host.size())
      throw ddg::ParseError("pairing declares " + std::to_string(declared) +
                                " edges, host has " + std::to_string(host.size()),
                            1);
    const auto pm = ddg::validate_pairing(host, pairs);
    std::cerr << "pairs sharing an endpoint " << pm.adjacent_pairs << '\n';
    const auto g = ddg::edge_pairing_graph(host, pm);
    if (chen_stats)
      print_stats(ddg::stats(g));
    else
      write_graph(g, construct_out);
  });

  // edges
  auto *edges = app.add_subcommand("edges", "Canonical edge-id table: edge_id u v");
  std::string edges_in;
  edges->add_option("--in", edges_in, "adjacency file")->required();
  edges->callback([&] {
    const auto g = ddg::read_adjacency_file(edges_in);
    const auto list = ddg::edge_list(g);
    for (std::size_t i = 0; i < list.size(); ++i)
      std::cout << i << ' ' << list[i].first << ' ' << list[i].second << '\n';
  });

  // verify
  auto *verify = app.add_subcommand("verify", "Replay machine-checkable record table entries");
  bool cayley_only = false, machine = false, no_timing = false;
  std::string data_dir, delta_range, d_range;
  verify->add_flag("--cayley-only", cayley_only, "only cyclic semidirect-product rows");
  verify->add_option("--data-dir", data_dir, "directory holding external adjacency/table/pairing files");
  verify->add_option("--delta", delta_range, "degree or range lo:hi");
  verify->add_option("--diameter", d_range, "diameter or range lo:hi");
  verify->add_option("--jobs", jobs, "parallel entries (0 = all cores)");
  verify->add_flag("--machine", machine, "line-oriented output");
  verify->add_flag("--no-timing", no_timing, "print '-' instead of wall times");
  verify->callback([&] {
    ddg::VerifyFilter filter;
    filter.cayley_only = cayley_only;
    if (!delta_range.empty() && !parse_range(delta_range, filter.delta_min, filter.delta_max))
      throw ddg::ArgumentError("bad --delta range '" + delta_range + "'");
    if (!d_range.empty() && !parse_range(d_range, filter.d_min, filter.d_max))
      throw ddg::ArgumentError("bad --diameter range '" + d_range + "'");
    ddg::VerifyOptions opts;
    opts.data_dir = data_dir;
    opts.jobs = jobs;
    const auto summary = ddg::verify_all(filter, opts);
    double total_ms = 0;
    for (const auto &r : summary.reports) {
      total_ms += r.millis;
      if (machine) {
        std::cout << r.machine_line(!no_timing) << '\n';
        continue;
      }
      std::printf("(%2u,%2u) %-8s claimed %-11llu %-22s", r.delta, r.d, r.label.c_str(),
                  static_cast<unsigned long long>(r.claimed_order), ddg::to_string(r.status).c_str());
      if (r.measured_order)
        std::printf(" order %llu degree %llu diameter %s",
                    static_cast<unsigned long long>(*r.measured_order),
                    static_cast<unsigned long long>(r.measured_degree.value_or(0)),
                    r.measured_diameter ? std::to_string(*r.measured_diameter).c_str() : "inf");
      std::printf("\n");
      if (r.status != ddg::VerifyStatus::external_data_missing || !data_dir.empty())
        for (const auto &note : r.notes)
          std::printf("          %s\n", note.c_str());
    }
    std::fflush(stdout);
    std::cerr << "summary: verified " << summary.verified << ", mismatch " << summary.mismatch
              << ", inconsistent-spec " << summary.inconsistent << ", external-data-missing "
              << summary.missing << " (" << static_cast<long long>(total_ms) << " ms)\n";
    if (summary.has_failures())
      exit_code = kMismatch;
  });

  // table
  auto *table = app.add_subcommand("table", "Record table with Moore bounds and ratios");
  bool table_machine = false;
  table->add_flag("--machine", table_machine, "line-oriented output: delta d order moore label");
  table->callback([&] {
    for (const auto &e : ddg::record_table()) {
      const auto bound = ddg::moore_bound(e.delta, e.d);
      if (table_machine)
        std::cout << e.delta << ' ' << e.d << ' ' << e.order << ' ' << bound << ' ' << e.label << '\n';
      else
        std::printf("(%2u,%2u) %-10s %12llu  moore %15llu  ratio %.6f%s\n", e.delta, e.d,
                    e.label.c_str(), static_cast<unsigned long long>(e.order),
                    static_cast<unsigned long long>(bound), ddg::moore_ratio(e), e.recent ? "  *" : "");
    }
  });

  // search
  ddg::SearchConfig cfg;
  std::string log_file, search_out;
  std::vector<CLI::Option *> restart_opts;
  // without --restarts, run as many restarts as the budget pays for
  auto fill_restarts = [&] {
    for (auto *o : restart_opts)
      if (o->count() > 0)
        return;
    const std::uint64_t per = 1ull + cfg.neighborhood_moves;
    cfg.restarts = static_cast<std::uint32_t>(
        std::min<std::uint64_t>((cfg.budget + per - 1) / per, 0xffffffffu));
  };
  auto add_search_opts = [&](CLI::App *cmd) {
    cmd->add_option("--seed", cfg.seed, "random seed")->required();
    cmd->add_option("--budget", cfg.budget, "maximum evaluations");
    cmd->add_option("--diameter", cfg.target_diameter, "target diameter")->required();
    restart_opts.push_back(
        cmd->add_option("--restarts", cfg.restarts, "number of restarts (default: fill the budget)"));
    cmd->add_option("--moves", cfg.neighborhood_moves, "local moves per restart");
    cmd->add_option("--jobs", cfg.jobs, "parallel restarts (0 = all cores)");
    cmd->add_option("--log", log_file, "write the evaluation log here ('-' = stdout)");
  };
  auto emit_log = [&](const ddg::SearchLog &log) {
    if (log_file.empty())
      return;
    if (log_file == "-") {
      std::cout << log.text();
      return;
    }
    std::ofstream out(log_file, std::ios::binary);
    if (!out)
      throw ddg::Error("cannot write '" + log_file + "'");
    out << log.text();
  };

  auto *sg = app.add_subcommand("search-gens", "Hill-climb generator sets over Z_M x|_A Z_N");
  std::uint64_t sM = 0, sA = 0, sN = 0;
  sg->add_option("M", sM)->required();
  sg->add_option("A", sA)->required();
  sg->add_option("N", sN)->required();
  sg->add_option("--delta", cfg.target_delta, "target degree")->required();
  add_search_opts(sg);
  sg->callback([&] {
    const auto group = ddg::SemidirectGroup::validate({sM, sA, sN});
    fill_restarts();
    try {
      const auto res = ddg::search_generators(group, cfg);
      emit_log(res.log);
      std::cerr << "best " << ddg::objective_text_generators(res.best.objective) << " restart "
                << res.best.restart << " move " << res.best.move << " evaluations "
                << res.log.entries.size() << '\n';
      std::cerr << "job sd " << sM << ' ' << sA << ' ' << sN;
      for (auto g : res.best.generators)
        std::cerr << " gen " << g.x << ',' << g.y;
      std::cerr << '\n';
    } catch (const ddg::NoFeasibleCandidate &e) {
      emit_log(e.log());
      std::cerr << "error: " << e.what() << '\n';
      exit_code = kMismatch;
    }
  });

  auto *sp = app.add_subcommand("search-pairing", "Hill-climb complete edge pairings of a host");
  sp->add_option("--host", host_file, "host adjacency file (default: Foster graph)");
  sp->add_option("--out", search_out, "write the best pairing file here");
  add_search_opts(sp);
  sp->callback([&] {
    const auto host = host_file.empty() ? ddg::foster_graph() : ddg::read_adjacency_file(host_file);
    cfg.target_delta = 3;
    fill_restarts();
    try {
      const auto res = ddg::search_pairing(host, cfg);
      emit_log(res.log);
      std::cerr << "best " << ddg::objective_text_pairing(res.best.objective) << " restart "
                << res.best.restart << " move " << res.best.move << " evaluations "
                << res.log.entries.size() << '\n';
      if (!search_out.empty()) {
        std::ofstream out(search_out, std::ios::binary);
        if (!out)
          throw ddg::Error("cannot write '" + search_out + "'");
        ddg::write_pairing(out, ddg::validate_pairing(host, res.best.pairs));
      }
    } catch (const ddg::NoFeasibleCandidate &e) {
      emit_log(e.log());
      std::cerr << "error: " << e.what() << '\n';
      exit_code = kMismatch;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const ddg::Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
