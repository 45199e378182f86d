#pragma once

#include <string>
#include <variant>
#include <vector>

#include "reqforge/model.hpp"

namespace reqforge {

struct ParagraphBlock {
  std::string text;
};

struct TableBlock {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // each row has header.size() cells
};

/// Link to a diagram file, relative to the document's directory.
struct DiagramRefBlock {
  std::string title;
  std::string path;
};

using Block = std::variant<ParagraphBlock, TableBlock, DiagramRefBlock>;

struct Section {
  int level = 1;  // heading level; children are at most one deeper
  std::string heading;
  std::vector<Block> blocks;
};

/// Ordered document tree, flattened: nesting is encoded in the section
/// levels.
struct Document {
  std::string title;  // rendered as a level-1 heading when non-empty
  std::vector<Section> sections;
};

/// Builds the Software Requirements Specification by walking the model
/// from its root: an overview with element counts, one chapter per
/// requirements container (tabular view plus an appendix of requirements
/// no component satisfies), then one chapter per package holding its
/// common interfaces and one section per component with exactly four
/// subsections: Requirements, Services, Structure, Deployment.
Document generate_srs(const Model& model);

/// Builds the development roadmap: one table per release milestone
/// mapping case study requirements to the covering tool requirements
/// that first become available there, then a "Not yet covered" table
/// equal to the lenient gap report.
Document generate_roadmap_doc(const Model& model);

/// CommonMark rendering: #-headings, pipe tables, reference links.
/// Byte-identical across runs.
std::string render_markdown(const Document& doc);

}  // namespace reqforge
