#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pyralign/profile_align.hpp"
#include "pyralign/seq_model.hpp"

namespace pyralign {

/// Records start at '>' header lines; the id is the first whitespace-
/// delimited token of the header. Body lines are concatenated and validated
/// against the alphabet. Errors carry the 1-based line number.
std::vector<Sequence> parse_fasta(std::istream& in, const Alphabet& alphabet);
std::vector<Sequence> parse_fasta(const std::filesystem::path& path, const Alphabet& alphabet);

void write_fasta(std::ostream& out, const std::vector<Sequence>& sequences, std::size_t line_width = 60);
void write_fasta(const std::filesystem::path& path, const std::vector<Sequence>& sequences);

enum class AlignmentFormat { AlignedFasta, Clustal };

AlignmentFormat parse_alignment_format(std::string_view name);

/// Byte-exact rendering of the profile's member rows. Aligned FASTA wraps at
/// 60 columns; Clustal writes 60-column blocks, one line per member, each
/// followed by a conservation line ('*' where all members share a residue).
std::string format_alignment(const Profile& msa, AlignmentFormat format);
void write_alignment(const Profile& msa, AlignmentFormat format, const std::filesystem::path& path);

/// Reads an aligned FASTA file back into rows (gaps allowed).
std::vector<AlignedSequence> parse_aligned_fasta(std::istream& in);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace pyralign
