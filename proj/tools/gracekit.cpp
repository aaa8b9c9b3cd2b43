// gracekit: command-line surface over the graceful-labeling toolkit.
// Exit codes: 0 pass/found, 1 not-graceful/absent, 2 usage error,
// 3 sweep violation (falsifying witness written to the output).

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gracekit/algebra.hpp"
#include "gracekit/core.hpp"
#include "gracekit/decomposition.hpp"
#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"
#include "gracekit/expansion.hpp"
#include "gracekit/io.hpp"
#include "gracekit/labeling.hpp"
#include "gracekit/monoid.hpp"
#include "gracekit/theorems.hpp"

namespace {

using namespace gracekit;

constexpr int kExitFound = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

// Append-only per-shard results under GRACEFUL_KIT_CACHE so interrupted
// sweeps resume instead of recomputing finished chunks.
class Checkpoint {
public:
  explicit Checkpoint(const std::string& key) {
    const char* dir = std::getenv("GRACEFUL_KIT_CACHE");
    if (!dir || !*dir) return;
    enabled_ = true;
    std::filesystem::create_directories(dir);
    path_ = std::string(dir) + "/" + key + ".log";
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (tab != std::string::npos) done_[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }

  std::optional<std::string> lookup(const std::string& shard_key) const {
    auto it = done_.find(shard_key);
    if (it == done_.end()) return std::nullopt;
    return it->second;
  }

  void record(const std::string& shard_key, const std::string& payload) {
    if (!enabled_) return;
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    out << shard_key << '\t' << payload << '\n';
  }

private:
  bool enabled_ = false;
  std::string path_;
  std::map<std::string, std::string> done_;
  std::mutex mutex_;
};

std::string encode_report(const SweepReport& r) {
  std::ostringstream out;
  out << r.instances_checked << ',' << r.vacuous;
  for (const auto& v : r.violations) out << ',' << to_text(v.f) << ':' << v.predicate;
  return out.str();
}

SweepReport decode_report(int n, const std::string& universe, const std::string& payload) {
  SweepReport r;
  r.n = n;
  r.universe = universe;
  std::istringstream in(payload);
  std::string tok;
  std::getline(in, tok, ',');
  r.instances_checked = std::stoull(tok);
  std::getline(in, tok, ',');
  r.vacuous = std::stoull(tok);
  while (std::getline(in, tok, ',')) {
    auto colon = tok.rfind(':');
    r.violations.push_back({parse_endofunction(tok.substr(0, colon)), tok.substr(colon + 1), "cached"});
  }
  return r;
}

void merge_into(SweepReport& total, const SweepReport& part) {
  total.instances_checked += part.instances_checked;
  total.vacuous += part.vacuous;
  total.violations.insert(total.violations.end(), part.violations.begin(), part.violations.end());
  total.wall_seconds += part.wall_seconds;
}

std::uint64_t universe_size(int n, Universe u) {
  switch (u) {
    case Universe::trees: return RootedTreeStream(n).size();
    case Universe::endofunctions: return EndofunctionStream(n).size();
    case Universe::permutations: return PermutationStream(n).size();
  }
  return 0;
}

// Deterministic sharded runner: results merge in shard order, so output is
// byte-identical however many jobs run or whichever finishes first.
template <typename Fn>
SweepReport run_sharded(int n, const std::string& universe_label, std::uint64_t size,
                        std::optional<Shard> range, int jobs, Checkpoint& checkpoint,
                        const Fn& sweep_shard) {
  Shard full = range.value_or(Shard{0, size});
  std::uint64_t chunk = std::max<std::uint64_t>(1, (full.size() + 63) / 64);
  std::vector<Shard> shards;
  for (std::uint64_t lo = full.lo; lo < full.hi; lo += chunk)
    shards.push_back(Shard{lo, std::min(full.hi, lo + chunk)});

  SweepReport total;
  total.n = n;
  total.universe = universe_label;
  std::vector<std::optional<SweepReport>> results(shards.size());

  std::vector<size_t> pending;
  for (size_t i = 0; i < shards.size(); ++i) {
    std::string key = std::to_string(shards[i].lo) + ".." + std::to_string(shards[i].hi);
    if (auto hit = checkpoint.lookup(key))
      results[i] = decode_report(n, universe_label, *hit);
    else
      pending.push_back(i);
  }

  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      size_t slot = cursor.fetch_add(1);
      if (slot >= pending.size()) return;
      size_t i = pending[slot];
      SweepReport part = sweep_shard(shards[i]);
      std::string key = std::to_string(shards[i].lo) + ".." + std::to_string(shards[i].hi);
      checkpoint.record(key, encode_report(part));
      results[i] = std::move(part);
    }
  };
  std::vector<std::future<void>> futures;
  for (int j = 1; j < jobs; ++j) futures.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& fut : futures) fut.get();

  for (const auto& part : results) merge_into(total, *part);
  return total;
}

int emit_sweep(const SweepReport& report, const std::string& output) {
  if (!output.empty()) {
    std::ofstream csv(output);
    csv << sweep_csv(report);
  }
  std::cout << sweep_summary_json(report).dump(2) << "\n";
  return report.passed() ? kExitFound : kExitViolation;
}

Endofunction stream_item(const std::string& kind, int n, std::uint64_t k) {
  if (kind == "trees") return RootedTreeStream(n).at(k);
  if (kind == "perms") return PermutationStream(n).at(k);
  return EndofunctionStream(n).at(k);
}

std::uint64_t stream_size(const std::string& kind, int n) {
  if (kind == "trees") return RootedTreeStream(n).size();
  if (kind == "perms") return PermutationStream(n).size();
  return EndofunctionStream(n).size();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graceful labeling toolkit for functional directed graphs over Z_n"};
  app.require_subcommand(1);

  std::string f_text, sigma_text, shard_text, output, universe_text = "trees", what, kind;
  int n = 0, t = 0, k = 0, jobs = 1;
  bool canonical = false, use_bnb = false;

  auto* check = app.add_subcommand("check", "label profile and gracefulness of f");
  check->add_option("-f", f_text, "function as comma-separated images")->required();
  check->add_flag("--bnb", use_bnb, "allow branch-and-bound label extremes for n > 8");

  auto* search = app.add_subcommand("search", "find the least graceful relabeling sigma");
  search->add_option("-f", f_text)->required();

  auto* grl_cmd = app.add_subcommand("grl", "distinct gracefully labeled conjugates of f");
  grl_cmd->add_option("-f", f_text)->required();

  auto* bases = app.add_subcommand("bases", "permutation bases fixing 0");
  bases->add_option("-n", n)->required();

  auto* expand = app.add_subcommand("expand", "graceful expansion of f from sigma");
  expand->add_option("-f", f_text)->required();
  expand->add_option("--sigma", sigma_text)->required();
  expand->add_option("-t", t)->check(CLI::Range(0, 1));

  auto* certify = app.add_subcommand("certify", "determinantal certificate of grace");
  certify->add_option("-f", f_text)->required();

  auto* pinv = app.add_subcommand("pinv", "k-pseudoinverse set of f");
  pinv->add_option("-f", f_text)->required();
  pinv->add_option("-k", k);
  pinv->add_flag("--canonical", canonical, "canonical pseudoinverse set instead");

  auto* verify = app.add_subcommand("verify", "empirical sweeps: lemma|main|prop17|corollaries");
  verify->add_option("what", what)->required()
      ->check(CLI::IsMember({"lemma", "main", "prop17", "corollaries"}));
  verify->add_option("-n", n)->required();
  verify->add_option("--universe", universe_text, "trees|endofunctions|permutations");
  verify->add_option("--shard", shard_text, "half-open index range k..m");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--output", output, "CSV destination for violations");

  auto* decompose = app.add_subcommand("decompose", "cyclic shifts partitioning K_{2n-1}");
  decompose->add_option("-f", f_text)->required();
  decompose->add_option("--sigma", sigma_text)->required();
  decompose->add_option("--output", output, "edge-list destination");

  auto* gen = app.add_subcommand("gen", "enumerate trees|perms|functions");
  gen->add_option("kind", kind)->required()->check(CLI::IsMember({"trees", "perms", "functions"}));
  gen->add_option("-n", n)->required();
  gen->add_option("--shard", shard_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) {
      Endofunction f = parse_endofunction(f_text);
      auto profile = label_profile(f);
      json j;
      j["f"] = to_text(f);
      j["labels"] = profile.labels;
      j["distinct_count"] = profile.distinct_count;
      j["gracefully_labeled"] = profile.graceful();
      auto sigma = find_graceful_labeling(f);
      j["graceful"] = sigma.has_value();
      j["sigma"] = sigma ? to_text(*sigma) : "";
      if (f.size() <= 8 || use_bnb) {
        j["grl_size"] = grl(f).size();
        j["min_labels"] = min_distinct_labels(f, use_bnb);
        j["max_labels"] = max_distinct_labels(f, use_bnb);
      }
      std::cout << j.dump(2) << "\n";
      return sigma ? kExitFound : kExitAbsent;
    }

    if (*search) {
      Endofunction f = parse_endofunction(f_text);
      auto sigma = find_graceful_labeling(f);
      json j{{"f", to_text(f)}, {"graceful", sigma.has_value()},
             {"sigma", sigma ? to_text(*sigma) : ""}};
      std::cout << j.dump(2) << "\n";
      return sigma ? kExitFound : kExitAbsent;
    }

    if (*grl_cmd) {
      Endofunction f = parse_endofunction(f_text);
      auto members = grl(f);
      json j;
      j["f"] = to_text(f);
      j["grl_size"] = members.size();
      j["members"] = json::array();
      for (const auto& h : members) j["members"].push_back(to_text(h));
      std::cout << j.dump(2) << "\n";
      return members.empty() ? kExitAbsent : kExitFound;
    }

    if (*bases) {
      auto list = enumerate_bases(n);
      json j;
      j["n"] = n;
      j["count"] = list.size();
      j["bases"] = json::array();
      for (const auto& gamma : list) j["bases"].push_back(to_text(gamma));
      std::cout << j.dump(2) << "\n";
      return kExitFound;
    }

    if (*expand) {
      Endofunction f = parse_endofunction(f_text);
      Endofunction sigma = parse_endofunction(sigma_text);
      ExpansionBasis basis;
      try {
        basis = expansion_from_labeling(f, sigma, t);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitAbsent;
      }
      std::cout << expansion_json(basis).dump(2) << "\n";
      return kExitFound;
    }

    if (*certify) {
      Endofunction f = parse_endofunction(f_text);
      auto report = certify_graceful(f);
      std::cout << certificate_json(f, report).dump(2) << "\n";
      return report.graceful ? kExitFound : kExitAbsent;
    }

    if (*pinv) {
      Endofunction f = parse_endofunction(f_text);
      auto members = canonical ? canonical_pseudoinverse(f) : k_pseudoinverse(f, k);
      json j;
      j["f"] = to_text(f);
      j["k"] = canonical ? json() : json(k);
      j["canonical"] = canonical;
      j["size"] = members.size();
      j["members"] = json::array();
      for (const auto& g : members) j["members"].push_back(to_text(g));
      std::cout << j.dump(2) << "\n";
      return members.empty() ? kExitAbsent : kExitFound;
    }

    if (*verify) {
      Universe universe = parse_universe(universe_text);
      std::optional<Shard> range;
      if (!shard_text.empty()) range = Shard::parse(shard_text);
      std::string key = "sweep_" + what + "_n" + std::to_string(n) + "_" + universe_name(universe);
      Checkpoint checkpoint(key);

      if (what == "lemma") {
        auto report = run_sharded(n, universe_name(universe), universe_size(n, universe), range,
                                  jobs, checkpoint,
                                  [&](Shard s) { return verify_composition_lemma(n, universe, s); });
        return emit_sweep(report, output);
      }
      if (what == "main") {
        auto report = run_sharded(n, universe_name(universe), universe_size(n, universe), range,
                                  jobs, checkpoint,
                                  [&](Shard s) { return verify_main_theorem(n, universe, s); });
        return emit_sweep(report, output);
      }
      if (what == "prop17") {
        auto sweep_shard = [&](Shard s) {
          SweepReport part;
          part.n = n;
          part.universe = "trees";
          RootedTreeStream stream(n);
          for (std::uint64_t idx = s.lo; idx < s.hi; ++idx) {
            Endofunction f = stream.at(idx);
            if (f.is_constant()) {
              ++part.vacuous;
              continue;
            }
            ++part.instances_checked;
            Prop17Chain chain = prop17_chain(f, n);
            if (!chain.reached_constant || chain.steps > n - 2)
              part.violations.push_back({f, "prop17-termination", "chain exceeded n-2 steps"});
            else if (!chain.strictly_descending)
              part.violations.push_back({f, "prop17-strict-descent", "image size stalled"});
          }
          return part;
        };
        auto report =
            run_sharded(n, "trees", RootedTreeStream(n).size(), range, jobs, checkpoint, sweep_shard);
        return emit_sweep(report, output);
      }
      auto report = verify_cycle_corollaries(n, 3, 3, std::min(n, 6));
      return emit_sweep(report, output);
    }

    if (*decompose) {
      Endofunction f = parse_endofunction(f_text);
      Endofunction sigma = parse_endofunction(sigma_text);
      auto report = ringel_decompose(f, sigma);
      std::string edges = decomposition_edge_list(report);
      if (!output.empty()) {
        std::ofstream out(output);
        out << edges;
      } else {
        std::cout << edges;
      }
      if (!report.is_partition) {
        std::cerr << "partition FAILED: " << report.missing.size() << " missing, "
                  << report.duplicated.size() << " duplicated edges\n";
        return kExitViolation;
      }
      return kExitFound;
    }

    if (*gen) {
      std::uint64_t size = stream_size(kind, n);
      Shard range = shard_text.empty() ? Shard{0, size} : Shard::parse(shard_text);
      if (range.hi > size) throw std::invalid_argument("shard exceeds stream size");
      for (std::uint64_t idx = range.lo; idx < range.hi; ++idx)
        std::cout << to_text(stream_item(kind, n, idx)) << "\n";
      return kExitFound;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
