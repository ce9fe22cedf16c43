#pragma once

#include <string>

#include "etass/e1.hpp"
#include "etass/pages.hpp"

namespace etass::render {

/* First-page picture in the full (stem, slice) plane: one box per generator
   lattice point, differential arrows styled per operation (tau slope -1/2,
   rho slope -1, Sq2 vertical, composite operations slopes 1 and 1/2). */
std::string ascii_generator_plane(int max_stem, int min_slice, int max_slice, bool kw);
std::string svg_generator_plane(int max_stem, int min_slice, int max_slice, bool kw);

/* Weight-n column layout for pages >= 2: stem horizontal, slice vertical,
   cell entries are dimensions; differential arrows overlaid from the log. */
std::string ascii_page(const pages::Page& p2,
                       const std::vector<pages::DiffRecord>& log);
std::string svg_page(const pages::Page& p2,
                     const std::vector<pages::DiffRecord>& log);

std::string ascii_einf(const pages::EInfPage& einf);
std::string svg_einf(const pages::EInfPage& einf);

}  // namespace etass::render
