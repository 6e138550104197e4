// Generates the two benchmark inputs under data/ from coarse grid maps.
// Each region is the union of its grid cells; outlines are traced so that
// neighboring regions share exact boundary segments.

#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dorling/adjacency.hpp"
#include "dorling/geojson.hpp"
#include "dorling/region.hpp"

namespace {

using dorling::MultiPolygon;
using dorling::Point;
using dorling::Polygon;
using dorling::Region;
using dorling::Ring;

struct Cell {
  int c;
  int r;
  bool operator<(const Cell& o) const { return r != o.r ? r < o.r : c < o.c; }
};

struct IPoint {
  int x;
  int y;
  bool operator<(const IPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
  bool operator==(const IPoint& o) const { return x == o.x && y == o.y; }
};

struct IEdge {
  IPoint a;
  IPoint b;
};

// Traces the boundary loops of one 4-connected cell component with the
// interior kept on the left: outer rings come out counterclockwise, holes
// clockwise.
std::vector<std::vector<IPoint>> trace_component(const std::set<Cell>& cells, int nrows) {
  std::vector<IEdge> edges;
  for (const Cell& cell : cells) {
    const int ybot = nrows - 1 - cell.r;
    const int ytop = ybot + 1;
    const int x0 = cell.c;
    const int x1 = cell.c + 1;
    if (!cells.count({cell.c, cell.r + 1})) edges.push_back({{x0, ybot}, {x1, ybot}});
    if (!cells.count({cell.c + 1, cell.r})) edges.push_back({{x1, ybot}, {x1, ytop}});
    if (!cells.count({cell.c, cell.r - 1})) edges.push_back({{x1, ytop}, {x0, ytop}});
    if (!cells.count({cell.c - 1, cell.r})) edges.push_back({{x0, ytop}, {x0, ybot}});
  }

  std::map<IPoint, std::vector<std::size_t>> by_start;
  for (std::size_t i = 0; i < edges.size(); ++i) by_start[edges[i].a].push_back(i);

  std::vector<bool> used(edges.size(), false);
  std::vector<std::vector<IPoint>> loops;

  for (std::size_t seed = 0; seed < edges.size(); ++seed) {
    if (used[seed]) continue;
    std::vector<IPoint> loop{edges[seed].a, edges[seed].b};
    used[seed] = true;
    IPoint dir{edges[seed].b.x - edges[seed].a.x, edges[seed].b.y - edges[seed].a.y};

    while (!(loop.back() == loop.front())) {
      const auto& candidates = by_start.at(loop.back());
      std::size_t next = edges.size();
      int best_turn = -2;
      for (std::size_t idx : candidates) {
        if (used[idx]) continue;
        const IPoint out{edges[idx].b.x - edges[idx].a.x, edges[idx].b.y - edges[idx].a.y};
        if (out.x == -dir.x && out.y == -dir.y) continue;  // never backtrack
        const int turn = dir.x * out.y - dir.y * out.x;    // prefer left turns
        if (turn > best_turn) {
          best_turn = turn;
          next = idx;
        }
      }
      used[next] = true;
      dir = {edges[next].b.x - edges[next].a.x, edges[next].b.y - edges[next].a.y};
      loop.push_back(edges[next].b);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

Ring to_ring(const std::vector<IPoint>& loop, double cell_size) {
  // Drop collinear vertices, including across the closing seam.
  std::vector<IPoint> open(loop.begin(), loop.end() - 1);
  std::vector<IPoint> kept;
  const std::size_t n = open.size();
  for (std::size_t i = 0; i < n; ++i) {
    const IPoint& prev = open[(i + n - 1) % n];
    const IPoint& cur = open[i];
    const IPoint& nxt = open[(i + 1) % n];
    const int ax = cur.x - prev.x, ay = cur.y - prev.y;
    const int bx = nxt.x - cur.x, by = nxt.y - cur.y;
    if (ax * by - ay * bx != 0) kept.push_back(cur);
  }
  Ring ring;
  for (const IPoint& p : kept) ring.push_back({p.x * cell_size, p.y * cell_size});
  ring.push_back(ring.front());
  return ring;
}

double ring_area2(const std::vector<IPoint>& loop) {
  long long twice = 0;
  for (std::size_t i = 0; i + 1 < loop.size(); ++i) {
    twice += static_cast<long long>(loop[i].x) * loop[i + 1].y -
             static_cast<long long>(loop[i].y) * loop[i + 1].x;
  }
  return static_cast<double>(twice);
}

struct Entry {
  const char* id;
  const char* name;
  double value;
};

std::vector<Region> grid_to_regions(const std::vector<const char*>& rows,
                                    const std::vector<Entry>& entries, double cell_size) {
  const int nrows = static_cast<int>(rows.size());
  std::map<std::string, std::set<Cell>> cells_by_id;
  for (int r = 0; r < nrows; ++r) {
    std::istringstream line(rows[r]);
    std::string token;
    int c = 0;
    while (line >> token) {
      if (token != ".") cells_by_id[token].insert({c, r});
      ++c;
    }
  }

  for (const auto& [id, cells] : cells_by_id) {
    (void)cells;
    bool known = false;
    for (const Entry& e : entries) known = known || id == e.id;
    if (!known) throw std::runtime_error("grid id without a value entry: " + id);
  }

  std::vector<Region> regions;
  for (const Entry& e : entries) {
    const auto it = cells_by_id.find(e.id);
    if (it == cells_by_id.end()) throw std::runtime_error(std::string("no cells for ") + e.id);
    const std::set<Cell>& cells = it->second;

    // Split into 4-connected components; each becomes one polygon.
    std::set<Cell> remaining = cells;
    MultiPolygon geometry;
    while (!remaining.empty()) {
      std::set<Cell> component;
      std::vector<Cell> stack{*remaining.begin()};
      remaining.erase(remaining.begin());
      component.insert(stack.back());
      while (!stack.empty()) {
        const Cell cur = stack.back();
        stack.pop_back();
        for (const Cell nb : {Cell{cur.c + 1, cur.r}, Cell{cur.c - 1, cur.r},
                              Cell{cur.c, cur.r + 1}, Cell{cur.c, cur.r - 1}}) {
          const auto f = remaining.find(nb);
          if (f != remaining.end()) {
            component.insert(nb);
            stack.push_back(nb);
            remaining.erase(f);
          }
        }
      }

      auto loops = trace_component(component, nrows);
      Polygon poly;
      for (const auto& loop : loops) {  // outer ring first
        if (ring_area2(loop) > 0) poly.rings.insert(poly.rings.begin(), to_ring(loop, cell_size));
        else poly.rings.push_back(to_ring(loop, cell_size));
      }
      geometry.polygons.push_back(std::move(poly));
    }

    regions.push_back({e.id, std::move(geometry), e.value});
  }
  dorling::validate_regions(regions);
  return regions;
}

// ---------------------------------------------------------------------------
// Lower 48 states plus DC, 2015 population estimates.

const std::vector<const char*> kUsRows = {
    "WA WA WA ID MT MT MT MT MT ND ND ND MN MN MN .  .  .  .  .  .  .  .  .  .  .  ME ME",
    "WA WA WA ID ID MT MT MT MT MT ND ND MN MN MN WI WI MI MI .  .  .  .  .  VT NH ME ME",
    "OR OR OR ID ID WY WY WY WY SD SD SD MN MN MN WI WI .  .  MI .  NY NY NY VT NH .  . ",
    "OR OR OR ID ID WY WY WY WY SD SD SD IA IA IA WI WI .  .  MI .  NY NY NY MA MA MA . ",
    "CA CA NV NV UT UT CO CO NE NE NE NE IA IA IA IL IL IN MI MI .  PA PA NY CT CT RI . ",
    "CA CA NV NV UT UT CO CO NE NE NE NE MO MO IL IL IL IN OH OH PA PA PA NJ .  .  .  . ",
    "CA CA NV NV UT UT CO CO KS KS KS KS MO MO IL IL IL IN OH OH WV PA PA NJ .  .  .  . ",
    "CA CA NV NV AZ AZ NM OK KS KS KS KS MO MO MO KY KY KY KY WV WV MD DE DE .  .  .  . ",
    "CA CA AZ AZ AZ AZ NM OK OK OK OK OK MO MO MO TN TN TN VA VA VA DC MD .  .  .  .  . ",
    "CA CA AZ AZ AZ AZ NM NM OK OK OK OK AR AR AR TN AL TN NC NC VA VA VA .  .  .  .  . ",
    ".  .  AZ AZ AZ AZ NM NM TX TX TX TX AR AR MS MS AL GA NC NC NC .  .  .  .  .  .  . ",
    ".  .  .  .  .  .  .  TX TX TX TX TX TX LA MS MS AL GA SC SC .  .  .  .  .  .  .  . ",
    ".  .  .  .  .  .  .  TX TX TX TX TX TX LA LA .  AL GA GA .  .  .  .  .  .  .  .  . ",
    ".  .  .  .  .  .  .  TX TX TX TX TX .  .  .  .  FL FL FL FL .  .  .  .  .  .  .  . ",
    ".  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  FL .  .  .  .  .  .  .  . ",
    ".  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  .  FL .  .  .  .  .  .  .  . ",
};

const std::vector<Entry> kUsEntries = {
    {"WA", "Washington", 7170351},      {"OR", "Oregon", 4028977},
    {"CA", "California", 39144818},     {"ID", "Idaho", 1654930},
    {"NV", "Nevada", 2890845},          {"MT", "Montana", 1032949},
    {"WY", "Wyoming", 586107},          {"UT", "Utah", 2995919},
    {"AZ", "Arizona", 6828065},         {"CO", "Colorado", 5456574},
    {"NM", "New Mexico", 2085109},      {"ND", "North Dakota", 756927},
    {"SD", "South Dakota", 858469},     {"NE", "Nebraska", 1896190},
    {"KS", "Kansas", 2911641},          {"OK", "Oklahoma", 3911338},
    {"TX", "Texas", 27469114},          {"MN", "Minnesota", 5489594},
    {"IA", "Iowa", 3123899},            {"MO", "Missouri", 6083672},
    {"AR", "Arkansas", 2978204},        {"LA", "Louisiana", 4670724},
    {"WI", "Wisconsin", 5771337},       {"IL", "Illinois", 12859995},
    {"MS", "Mississippi", 2992333},     {"MI", "Michigan", 9922576},
    {"IN", "Indiana", 6619680},         {"KY", "Kentucky", 4425092},
    {"TN", "Tennessee", 6600299},       {"AL", "Alabama", 4858979},
    {"OH", "Ohio", 11613423},           {"GA", "Georgia", 10214860},
    {"FL", "Florida", 20271272},        {"WV", "West Virginia", 1844128},
    {"VA", "Virginia", 8382993},        {"NC", "North Carolina", 10042802},
    {"SC", "South Carolina", 4896146},  {"PA", "Pennsylvania", 12802503},
    {"NY", "New York", 19795791},       {"MD", "Maryland", 6006401},
    {"DE", "Delaware", 945934},         {"NJ", "New Jersey", 8958013},
    {"CT", "Connecticut", 3590886},     {"RI", "Rhode Island", 1056298},
    {"MA", "Massachusetts", 6794422},   {"VT", "Vermont", 626042},
    {"NH", "New Hampshire", 1330608},   {"ME", "Maine", 1329328},
    {"DC", "District of Columbia", 672228},
};

// ---------------------------------------------------------------------------
// North and South America, 2021 population.

const std::vector<const char*> kAmericasRows = {
    ".   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   GRL GRL .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   .   GRL GRL .  ",
    ".   .   CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN .   .   .   .   .  ",
    ".   .   CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN .   .   .   .   .  ",
    ".   .   CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN .   .   .   .   .  ",
    ".   .   CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN CAN .   .   .   .   .  ",
    ".   .   USA USA USA USA USA USA USA USA USA USA USA USA USA .   .   .   .   .   .   .  ",
    ".   .   USA USA USA USA USA USA USA USA USA USA USA USA USA .   BMU .   .   .   .   .  ",
    ".   .   USA USA USA USA USA USA USA USA USA USA USA USA USA .   .   .   .   .   .   .  ",
    ".   .   .   .   MEX MEX MEX MEX MEX MEX .   .   .   .   .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   MEX MEX MEX MEX .   .   .   .   .   .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   MEX MEX MEX .   .   .   BHS .   .   .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   .   GTM BLZ .   CUB CUB .   .   .   .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   .   GTM GTM .   .   .   .   .   HTI DOM .   KNA .   .   .   CUW .  ",
    ".   .   .   .   .   .   SLV HND HND .   .   .   JAM .   .   PRI .   ATG .   ABW .   .  ",
    ".   .   .   .   .   .   .   .   NIC CRI .   .   .   .   .   .   TTO .   GLP .   .   .  ",
    ".   .   .   .   .   .   .   .   .   CRI PAN COL COL VEN VEN .   .   DMA .   .   BRB .  ",
    ".   .   .   .   .   .   .   .   .   .   .   COL COL VEN GUY SUR GUF .   MTQ .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   ECU COL BRA BRA BRA BRA .   .   LCA .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   PER PER BRA BRA BRA BRA .   VCT .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   PER PER BRA BRA BRA BRA .   .   GRD .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   PER BOL BRA BRA BRA .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL BOL BOL BRA BRA .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG PRY BRA .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG ARG BRA .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG ARG URY .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG ARG .   .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG .   .   .   .   .   .   .   .  ",
    ".   .   .   .   .   .   .   .   .   .   .   .   CHL ARG .   .   .   .   .   .   .   .  ",
};

const std::vector<Entry> kAmericasEntries = {
    {"CAN", "Canada", 38068000},        {"USA", "United States", 332915000},
    {"MEX", "Mexico", 130262000},       {"GRL", "Greenland", 56000},
    {"BMU", "Bermuda", 62000},          {"BHS", "Bahamas", 397000},
    {"CUB", "Cuba", 11317000},          {"JAM", "Jamaica", 2973000},
    {"HTI", "Haiti", 11542000},         {"DOM", "Dominican Republic", 10954000},
    {"PRI", "Puerto Rico", 2828000},    {"KNA", "Saint Kitts and Nevis", 53000},
    {"ATG", "Antigua and Barbuda", 99000}, {"GLP", "Guadeloupe", 400000},
    {"DMA", "Dominica", 72000},         {"MTQ", "Martinique", 375000},
    {"LCA", "Saint Lucia", 184000},     {"VCT", "Saint Vincent and the Grenadines", 111000},
    {"GRD", "Grenada", 113000},         {"BRB", "Barbados", 288000},
    {"TTO", "Trinidad and Tobago", 1403000}, {"ABW", "Aruba", 107000},
    {"CUW", "Curacao", 192000},         {"GTM", "Guatemala", 18249000},
    {"BLZ", "Belize", 404000},          {"SLV", "El Salvador", 6518000},
    {"HND", "Honduras", 10062000},      {"NIC", "Nicaragua", 6702000},
    {"CRI", "Costa Rica", 5139000},     {"PAN", "Panama", 4381000},
    {"COL", "Colombia", 51266000},      {"VEN", "Venezuela", 28705000},
    {"GUY", "Guyana", 790000},          {"SUR", "Suriname", 591000},
    {"GUF", "French Guiana", 306000},   {"ECU", "Ecuador", 17888000},
    {"PER", "Peru", 33359000},          {"BRA", "Brazil", 213993000},
    {"BOL", "Bolivia", 11833000},       {"PRY", "Paraguay", 7220000},
    {"CHL", "Chile", 19212000},         {"ARG", "Argentina", 45606000},
    {"URY", "Uruguay", 3485000},
};

void emit(const std::vector<const char*>& rows, const std::vector<Entry>& entries,
          double cell_size, const std::string& value_field, const std::string& path) {
  const auto regions = grid_to_regions(rows, entries, cell_size);
  dorling::write_text_file(path, dorling::regions_to_geojson(regions, value_field));
  const auto pairs = dorling::adjacency_pairs(regions, dorling::default_snap_tol(regions));
  std::printf("%s: %zu regions, %zu adjacency pairs\n", path.c_str(), regions.size(),
              pairs.size());
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "data";
  emit(kUsRows, kUsEntries, 160000.0, "POP2015", out_dir + "/us48_2015.geojson");
  emit(kAmericasRows, kAmericasEntries, 300000.0, "POP2021", out_dir + "/americas_2021.geojson");
  return 0;
}
