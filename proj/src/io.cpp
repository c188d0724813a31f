#include "pyralign/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "pyralign/error.hpp"

namespace pyralign {

namespace {

struct RawRecord {
  std::string id;
  std::string body;
  std::size_t header_line = 0;
};

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<RawRecord> read_records(std::istream& in) {
  std::vector<RawRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '>') {
      std::istringstream header(line.substr(first + 1));
      RawRecord rec;
      header >> rec.id;
      if (rec.id.empty()) throw parse_error(line_no, "header without an id");
      rec.header_line = line_no;
      records.push_back(std::move(rec));
      continue;
    }
    if (records.empty()) throw parse_error(line_no, "sequence data before the first '>' header");
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) records.back().body.push_back(c);
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read failure after line " + std::to_string(line_no));
  for (const auto& rec : records)
    if (rec.body.empty()) throw parse_error(rec.header_line, "record '" + rec.id + "' has no sequence");
  return records;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet) {
  std::vector<Sequence> out;
  std::set<std::string> seen;
  for (auto& rec : read_records(in)) {
    if (!seen.insert(rec.id).second) throw Error(ErrorCode::DuplicateId, "id '" + rec.id + "'");
    try {
      out.push_back(validate_sequence(rec.body, alphabet, rec.id));
    } catch (const Error& e) {
      throw parse_error(rec.header_line, e.what());
    }
  }
  return out;
}

std::vector<Sequence> parse_fasta(const std::filesystem::path& path, const Alphabet& alphabet) {
  auto in = open_input(path);
  return parse_fasta(in, alphabet);
}

std::vector<AlignedSequence> parse_aligned_fasta(std::istream& in) {
  std::vector<AlignedSequence> rows;
  for (auto& rec : read_records(in)) rows.push_back(AlignedSequence{std::move(rec.id), std::move(rec.body)});
  return rows;
}

void write_fasta(std::ostream& out, const std::vector<Sequence>& sequences, std::size_t line_width) {
  for (const auto& s : sequences) {
    out << '>' << s.id() << '\n';
    const std::string& r = s.residues();
    for (std::size_t p = 0; p < r.size(); p += line_width) out << std::string_view(r).substr(p, line_width) << '\n';
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failure on " + path.string());
}

void write_fasta(const std::filesystem::path& path, const std::vector<Sequence>& sequences) {
  std::ostringstream buf;
  write_fasta(buf, sequences);
  write_text_file(path, buf.str());
}

AlignmentFormat parse_alignment_format(std::string_view name) {
  if (name == "aligned-fasta" || name == "fasta") return AlignmentFormat::AlignedFasta;
  if (name == "clustal") return AlignmentFormat::Clustal;
  throw Error(ErrorCode::InvalidConfig, "unknown output format '" + std::string(name) + "'");
}

std::string format_alignment(const Profile& msa, AlignmentFormat format) {
  constexpr std::size_t kWidth = 60;
  const auto& rows = msa.members();
  if (rows.empty()) throw Error(ErrorCode::EmptyProfile, "nothing to write");
  const std::size_t width = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                              return a.size() < b.size();
                            })->size();
  std::ostringstream out;

  if (format == AlignmentFormat::AlignedFasta) {
    for (const auto& row : rows) {
      std::string cells = row.cells;
      cells.resize(width, kGap);
      out << '>' << row.id << '\n';
      for (std::size_t p = 0; p < width; p += kWidth) out << std::string_view(cells).substr(p, kWidth) << '\n';
    }
    return out.str();
  }

  std::size_t name_width = 0;
  for (const auto& row : rows) name_width = std::max(name_width, row.id.size());
  name_width += 4;
  out << "CLUSTAL multiple sequence alignment (pyralign)\n\n";
  for (std::size_t p = 0; p < width; p += kWidth) {
    const std::size_t len = std::min(kWidth, width - p);
    out << '\n';
    for (const auto& row : rows) {
      out << row.id << std::string(name_width - row.id.size(), ' ');
      for (std::size_t c = p; c < p + len; ++c) out << (c < row.size() ? row.cells[c] : kGap);
      out << '\n';
    }
    out << std::string(name_width, ' ');
    for (std::size_t c = p; c < p + len; ++c) {
      const char first = c < rows.front().size() ? rows.front().cells[c] : kGap;
      const bool conserved = first != kGap && first != msa.alphabet().ambiguity_symbol() &&
                             std::all_of(rows.begin(), rows.end(), [&](const AlignedSequence& r) {
                               return c < r.size() && r.cells[c] == first;
                             });
      out << (conserved ? '*' : ' ');
    }
    out << '\n';
  }
  return out.str();
}

void write_alignment(const Profile& msa, AlignmentFormat format, const std::filesystem::path& path) {
  write_text_file(path, format_alignment(msa, format));
}

}  // namespace pyralign
