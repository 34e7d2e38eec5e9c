#include "cjones/batch.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cjones/engine.hpp"
#include "cjones/errors.hpp"
#include "cjones/minimize.hpp"
#include "cjones/walks.hpp"

namespace cjones {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

CsvLoad load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  CsvLoad load;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = strip(line);
    if (trimmed.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      auto header = split_csv_row(trimmed);
      if (header.size() < 2 || strip(header[0]) != "name" ||
          strip(header[1]) != "braid")
        throw ParseError(path + ": expected header \"name,braid\"");
      continue;
    }
    auto fields = split_csv_row(trimmed);
    if (fields.size() < 2) {
      load.row_errors.push_back("line " + std::to_string(lineno) +
                                ": expected two fields");
      continue;
    }
    const std::string name = strip(fields[0]);
    if (name.empty()) {
      load.row_errors.push_back("line " + std::to_string(lineno) +
                                ": empty name");
      continue;
    }
    try {
      load.records.push_back({name, parse_braid(strip(fields[1]))});
    } catch (const std::exception& ex) {
      load.row_errors.push_back("line " + std::to_string(lineno) + ": " +
                                ex.what());
    }
  }
  if (load.records.empty())
    throw ParseError(path + ": no valid rows" +
                     (load.row_errors.empty()
                          ? ""
                          : " (first error: " + load.row_errors.front() + ")"));
  return load;
}

std::vector<ResultRecord> run_batch(const std::vector<KnotRecord>& records,
                                    const BatchOptions& opt) {
  if (opt.task == BatchTask::jones && opt.color < 2)
    throw DomainError("jones task needs color >= 2");
  std::vector<ResultRecord> results(records.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < records.size();
         i = next.fetch_add(1)) {
      const KnotRecord& rec = records[i];
      ResultRecord& out = results[i];
      out.name = rec.name;
      out.input_word = to_string(rec.word);
      try {
        switch (opt.task) {
          case BatchTask::walks:
            out.sw_count = static_cast<long long>(
                enumerate_simple_walks(rec.word).count());
            break;
          case BatchTask::minimize: {
            OrbitEntry e = minimize_walks(rec.word);
            out.minimal_word = to_string(e.word);
            out.sw_count = e.sw_count;
            out.mirror = e.mirror;
            for (const std::string& t : e.transform) {
              if (!out.transform.empty()) out.transform += ' ';
              out.transform += t;
            }
            break;
          }
          case BatchTask::jones:
            out.color = opt.color;
            out.jones = colored_jones(rec.word, opt.color).to_string();
            break;
        }
      } catch (const std::exception& ex) {
        out.error = ex.what();
      }
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  size_t jobs = opt.jobs > 0 ? static_cast<size_t>(opt.jobs) : (hw ? hw : 1);
  jobs = std::min(jobs, records.size());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

std::string results_to_csv(const std::vector<ResultRecord>& results) {
  std::ostringstream out;
  out << "name,input_word,minimal_word,sw_count,transform,mirror,jones,color,"
         "error\n";
  for (const ResultRecord& r : results) {
    out << csv_quote(r.name) << ',' << csv_quote(r.input_word) << ','
        << csv_quote(r.minimal_word) << ',' << r.sw_count << ','
        << csv_quote(r.transform) << ',' << (r.mirror ? 1 : 0) << ','
        << csv_quote(r.jones) << ',' << r.color << ',' << csv_quote(r.error)
        << '\n';
  }
  return out.str();
}

std::string results_to_json(const std::vector<ResultRecord>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRecord& r : results) {
    arr.push_back({{"name", r.name},
                   {"input_word", r.input_word},
                   {"minimal_word", r.minimal_word},
                   {"sw_count", r.sw_count},
                   {"transform", r.transform},
                   {"mirror", r.mirror},
                   {"jones", r.jones},
                   {"color", r.color},
                   {"error", r.error}});
  }
  return arr.dump(2) + "\n";
}

}  // namespace cjones
