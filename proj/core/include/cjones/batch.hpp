#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/laurent.hpp"

namespace cjones {

struct KnotRecord {
  std::string name;
  BraidWord word;
};

struct CsvLoad {
  std::vector<KnotRecord> records;
  std::vector<std::string> row_errors;  // "line N: message"
};

/// Reads a CSV with header "name,braid"; the braid field holds a
/// signed-integer-list word, usually quoted.  Bad rows are collected, not
/// fatal; an input with no valid rows at all throws ParseError.
CsvLoad load_csv(const std::string& path);

enum class BatchTask { walks, minimize, jones };

struct ResultRecord {
  std::string name;
  std::string input_word;
  std::string minimal_word;  // minimize task only
  long long sw_count = -1;
  std::string transform;   // minimize task, space-joined
  bool mirror = false;     // minimize task
  std::string jones;       // jones task, polynomial rendering
  int color = 0;           // jones task
  std::string error;       // per-record failure, empty on success
};

struct BatchOptions {
  BatchTask task = BatchTask::walks;
  int color = 2;  // jones task
  int jobs = 0;   // 0: hardware concurrency
};

/// Runs the task over every record.  Output order equals input order and
/// the results are independent of the job count.
std::vector<ResultRecord> run_batch(const std::vector<KnotRecord>& records,
                                    const BatchOptions& opt);

/// CSV and JSON renderings of a result list; fields mirror one another.
std::string results_to_csv(const std::vector<ResultRecord>& results);
std::string results_to_json(const std::vector<ResultRecord>& results);

}  // namespace cjones
