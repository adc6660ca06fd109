#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotalt/classify.hpp"

namespace knotalt {

enum class CheckSet { All, Alternative, Homogeneous };

enum class ErrorKind { Input, Consistency };

struct ReportError {
  ErrorKind kind = ErrorKind::Input;
  std::string message;
  bool operator==(const ReportError&) const = default;
};

/// One diagram's result. Verdict fields are absent when not requested by
/// the check set or when the diagram could not be processed.
struct Record {
  std::string name;
  std::string source;
  std::optional<ReportError> error;

  int crossings = 0;
  int components = 0;
  int circles = 0;
  int spaces = 0;
  std::optional<int> outer_dart;
  int outer_region = 0;
  std::vector<int> circle_heights;
  std::vector<int> space_heights;

  std::optional<bool> homogeneous;
  std::optional<bool> alternative;
  std::optional<MethodResults> methods;
  std::optional<BlockWitness> block_witness;
  std::optional<SpaceWitness> space_witness;
  std::optional<ComponentWitness> spatial_witness;
  std::optional<ComponentWitness> height_witness;

  std::optional<double> milliseconds;
  std::optional<std::string> dot;

  bool operator==(const Record&) const = default;
};

struct Summary {
  int diagrams = 0;
  int alternative = 0;
  int homogeneous = 0;
  int neither = 0;
  int errors = 0;
  bool operator==(const Summary&) const = default;
};

Record make_record(const Analysis& a, CheckSet checks);
Record error_record(std::string name, std::string source, ErrorKind kind, std::string message);

Summary summarize(const std::vector<Record>& records);

nlohmann::ordered_json to_json(const Record& r);
Record record_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const std::vector<Record>& records);
std::vector<Record> records_from_json(const nlohmann::json& j);

std::string to_text(const Record& r);
std::string to_text(const Summary& s);

}  // namespace knotalt
