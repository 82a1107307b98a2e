#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "bei/errors.hpp"
#include "bei/graph_io.hpp"
#include "bei/pipeline.hpp"

namespace bei {

namespace fs = std::filesystem;

int default_worker_count() {
  if (const char* env = std::getenv("BEI_WORKERS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct Checkpoint {
  int n = 0;
  std::string options_hash;
  std::string last_certificate;
  std::int64_t records_done = 0;
  std::uint64_t bytes = 0;
};

std::string options_hash(const PipelineOptions& o) {
  std::ostringstream key;
  key << "n=" << o.n << ";s2=" << o.classify.s2 << ";complex=" << o.classify.complex
      << ";short=" << o.classify.short_circuit << ";input=" << (o.input ? o.input->string() : "");
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : key.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

void write_atomically(const fs::path& target, const std::string& content) {
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw IoError("write failure on " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

void write_checkpoint(const fs::path& dir, const Checkpoint& cp) {
  nlohmann::ordered_json j;
  j["n"] = cp.n;
  j["options_hash"] = cp.options_hash;
  j["last_certificate"] = cp.last_certificate;
  j["records_done"] = cp.records_done;
  j["bytes"] = cp.bytes;
  write_atomically(dir / kCheckpointFile, j.dump() + "\n");
}

std::optional<Checkpoint> read_checkpoint(const fs::path& dir) {
  std::ifstream in(dir / kCheckpointFile);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    Checkpoint cp;
    cp.n = j.at("n").get<int>();
    cp.options_hash = j.at("options_hash").get<std::string>();
    cp.last_certificate = j.at("last_certificate").get<std::string>();
    cp.records_done = j.at("records_done").get<std::int64_t>();
    cp.bytes = j.at("bytes").get<std::uint64_t>();
    return cp;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("corrupt checkpoint: ") + e.what());
  }
}

void tally(RunSummary& s, const ClassRecord& r) {
  ++s.generated;
  if (r.indecomposable.value_or(false)) ++s.indecomposable;
  if (r.indecomposable.value_or(false) && r.unmixed.value_or(false)) {
    ++s.indecomposable_unmixed;
    if (r.accessible.value_or(false)) ++s.accessible;
    if (r.strongly_unmixed.value_or(false)) ++s.strongly_unmixed;
    if (r.s2.has_value()) s.s2 = s.s2.value_or(0) + (*r.s2 ? 1 : 0);
  }
}

std::vector<Certificate> stage_one(const PipelineOptions& opts) {
  if (!opts.input) return enumerate_connected_certificates(opts.n);
  std::ifstream in(*opts.input);
  if (!in) throw IoError("cannot open " + opts.input->string());
  std::unordered_set<Certificate, CertificateHash> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    const Graph g = decode_graph6(line);
    if (opts.n > 0 && g.order() != opts.n) continue;
    if (!is_connected(g)) throw InvalidInput("input graph " + line + " is not connected");
    seen.insert(canonical_certificate(g));
  }
  if (in.bad()) throw IoError("read failure on " + opts.input->string());
  std::vector<Certificate> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RunResult run_pipeline(const PipelineOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  if (opts.workers < 1) throw InvalidInput("workers must be at least 1");
  if (opts.checkpoint_every < 1) throw InvalidInput("checkpoint interval must be positive");

  const std::vector<Certificate> items = stage_one(opts);
  const std::string hash = options_hash(opts);

  RunResult result;
  result.summary.n = opts.n;
  result.summary.workers = opts.workers;

  std::size_t begin = 0;
  std::uint64_t bytes = 0;
  std::ofstream partial;
  if (opts.out_dir) {
    std::error_code ec;
    fs::create_directories(*opts.out_dir, ec);
    if (ec) throw IoError("cannot create " + opts.out_dir->string() + ": " + ec.message());
    const fs::path part_path = *opts.out_dir / kPartialFile;
    std::optional<Checkpoint> cp = opts.resume ? read_checkpoint(*opts.out_dir) : std::nullopt;
    if (cp) {
      if (cp->n != opts.n || cp->options_hash != hash) throw InvalidInput("checkpoint belongs to a different run");
      if (!fs::exists(part_path) || fs::file_size(part_path) < cp->bytes) throw IoError("partial output shorter than checkpoint");
      fs::resize_file(part_path, cp->bytes);
      result.records = read_records(part_path);
      if (static_cast<std::int64_t>(result.records.size()) != cp->records_done ||
          (cp->records_done > 0 && result.records.back().certificate.bytes != cp->last_certificate)) {
        throw IoError("partial output does not match checkpoint");
      }
      for (const ClassRecord& r : result.records) tally(result.summary, r);
      begin = result.records.size();
      bytes = cp->bytes;
      if (begin > items.size() || (begin > 0 && items[begin - 1].bytes != cp->last_certificate)) {
        throw IoError("checkpoint does not match the graph stream");
      }
      partial.open(part_path, std::ios::app | std::ios::binary);
    } else {
      fs::remove(*opts.out_dir / kCheckpointFile, ec);
      partial.open(part_path, std::ios::trunc | std::ios::binary);
    }
    if (!partial) throw IoError("cannot open " + part_path.string());
  }

  std::vector<std::unique_ptr<SuMemo>> memos;
  for (int w = 0; w < opts.workers; ++w) memos.push_back(std::make_unique<SuMemo>());

  const std::size_t limit =
      opts.stop_after ? std::min<std::size_t>(items.size(), static_cast<std::size_t>(*opts.stop_after)) : items.size();
  while (begin < limit) {
    const std::size_t end = std::min(limit, begin + static_cast<std::size_t>(opts.checkpoint_every));
    std::vector<ClassRecord> batch(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);

    auto work = [&](int w) {
      for (std::size_t i = begin; i < end; ++i) {
        if (opts.workers > 1 && static_cast<int>(CertificateHash{}(items[i]) % opts.workers) != w) continue;
        try {
          batch[i - begin] = classify(decode_graph6(items[i].bytes), opts.classify, *memos[w]);
        } catch (...) {
          errors[i - begin] = std::current_exception();
        }
      }
    };
    if (opts.workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < opts.workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    for (ClassRecord& r : batch) {
      tally(result.summary, r);
      if (partial.is_open()) {
        const std::string line = record_to_json(r) + "\n";
        partial << line;
        bytes += line.size();
      }
      result.records.push_back(std::move(r));
    }
    if (partial.is_open()) {
      partial.flush();
      if (!partial) throw IoError("write failure on partial output");
      write_checkpoint(*opts.out_dir, Checkpoint{opts.n, hash, result.records.back().certificate.bytes,
                                                 static_cast<std::int64_t>(result.records.size()), bytes});
    }
    begin = end;
  }

  result.summary.completed = result.records.size() == items.size();
  result.report = verify_equivalence(result.records);
  result.summary.equivalence_verified = result.summary.completed && result.report.verified;
  result.summary.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (opts.out_dir && result.summary.completed) {
    partial.close();
    std::error_code ec;
    fs::rename(*opts.out_dir / kPartialFile, *opts.out_dir / kRecordsFile, ec);
    if (ec) throw IoError("cannot finalize records: " + ec.message());
    write_atomically(*opts.out_dir / kSummaryFile, summary_csv(result.summary));
    fs::remove(*opts.out_dir / kCheckpointFile, ec);
  }
  return result;
}

}  // namespace bei
