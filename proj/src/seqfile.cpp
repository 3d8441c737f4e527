#include "pcclosure/seqfile.hpp"

#include <fstream>
#include <sstream>

#include "pcclosure/parse.hpp"

namespace pcc {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Split on top-level commas (depth tracked so parenthesized expressions
// survive; the expression grammar itself has no commas).
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  std::string last = strip(cur);
  if (!last.empty() || !out.empty()) out.push_back(last);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::runtime_error("sequence file, line " + std::to_string(line) + ": " +
                           msg);
}

}  // namespace

SequenceSpec parse_sequence_spec(const std::string& content) {
  SequenceSpec spec;
  bool saw_rank = false, saw_prefix = false, saw_u = false, saw_b = false,
       saw_n0 = false;
  std::istringstream in(content);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key == "rank") {
      spec.rank = std::stoi(value);
      saw_rank = true;
    } else if (key == "prefix") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        fail(lineno, "prefix must be a [..] list");
      std::string inner = strip(value.substr(1, value.size() - 2));
      if (inner.empty()) fail(lineno, "prefix must be nonempty");
      spec.prefix_exprs = split_list(inner);
      saw_prefix = true;
    } else if (key == "tail.u") {
      spec.tail_u = value;
      saw_u = true;
    } else if (key == "tail.b") {
      if (value.size() < 2 || value.front() != '(' || value.back() != ')')
        fail(lineno, "tail.b must be a (..) tuple of integers");
      for (const std::string& part :
           split_list(strip(value.substr(1, value.size() - 2)))) {
        try {
          spec.tail_b.emplace_back(part);
        } catch (const std::exception&) {
          fail(lineno, "bad integer in tail.b: '" + part + "'");
        }
      }
      saw_b = true;
    } else if (key == "tail.n0") {
      try {
        spec.tail_n0 = Int(value);
      } catch (const std::exception&) {
        fail(lineno, "bad integer for tail.n0");
      }
      saw_n0 = true;
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!saw_rank) fail(lineno, "missing 'rank'");
  if (!saw_prefix) fail(lineno, "missing 'prefix'");
  if (!saw_u) fail(lineno, "missing 'tail.u'");
  if (!saw_b) fail(lineno, "missing 'tail.b'");
  if (!saw_n0) fail(lineno, "missing 'tail.n0'");
  if (spec.rank < 1) throw std::runtime_error("rank must be >= 1");
  if (static_cast<int>(spec.tail_b.size()) != spec.rank)
    throw std::runtime_error("tail.b length does not match rank");
  if (spec.tail_n0 != Int(spec.prefix_exprs.size()) - 1)
    throw std::runtime_error("tail.n0 must equal len(prefix) - 1");
  return spec;
}

SequenceSpec load_sequence_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open sequence file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_sequence_spec(buf.str());
}

PCSeq build_sequence(const SequenceSpec& spec) {
  std::vector<FieldElement> prefix;
  for (const std::string& e : spec.prefix_exprs)
    prefix.push_back(parse_element(e, spec.rank));
  FieldElement u = parse_element(spec.tail_u, spec.rank);
  GroupElement b = GroupElement::finite(spec.tail_b);
  return PCSeq(std::move(prefix), GeoTail{u, b, spec.tail_n0});
}

std::string print_sequence_spec(const PCSeq& seq) {
  std::ostringstream os;
  os << "rank = " << seq.rank() << "\n";
  os << "prefix = [";
  for (size_t i = 0; i < seq.prefix().size(); ++i) {
    if (i) os << ", ";
    os << seq.prefix()[i].str();
  }
  os << "]\n";
  os << "tail.u = " << seq.tail().scale.str() << "\n";
  std::string b = seq.tail().step.str();
  os << "tail.b = " << b << "\n";
  os << "tail.n0 = " << seq.tail_start() << "\n";
  return os.str();
}

}  // namespace pcc
