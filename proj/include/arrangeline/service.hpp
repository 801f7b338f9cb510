#ifndef ARRANGELINE_SERVICE_HPP
#define ARRANGELINE_SERVICE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arrangeline/json_io.hpp"

namespace arrangeline {

/// Status plus JSON body. Every non-2xx body is an ApiError object
/// {"code", "message", "witness"?}.
struct ApiResponse {
  int status = 200;
  Json body;
};

/// UI coordinates are snapped onto a 2^20 x 2^20 integer grid: the bounding
/// box is translated to the origin and its longer side scaled to 2^20.
inline constexpr std::int64_t kCheckGrid = std::int64_t{1} << 20;

std::vector<Point> snap_to_grid(const std::vector<std::array<double, 2>>& points);

/// Result of the shared recognize step: a structure or a ready error response.
struct RecognizedOrError {
  std::optional<ArrangementStructure> structure;
  ApiResponse error;
};

/// validate_graph + recognize with service error mapping (422 on rejection).
RecognizedOrError recognize_for_api(const Graph& g);

ApiResponse api_generate(const std::optional<std::string>& level, const std::optional<std::string>& seed);
ApiResponse api_recognize(const std::string& body);
/// Body: graph JSON, optional "optimizeCuts": bool.
ApiResponse api_draw(const std::string& body);
/// Body: graph JSON, optional "start": vertex.
ApiResponse api_solve_plan(const std::string& body);
/// Body: {"positions": [[x, y], ...] or {"v": [x, y]}, "edges": [[u, v], ...]}.
ApiResponse api_check(const std::string& body);

struct ServerOptions {
  std::string bind = "0.0.0.0";
  int port = 8080;
};

/// ARRANGELINE_PORT and ARRANGELINE_BIND override the defaults.
ServerOptions server_options_from_env();

/// Stateless HTTP facade over the api_* handlers, with permissive CORS.
class ApiServer {
 public:
  ApiServer();
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds to `port` (0 picks a free one); returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace arrangeline

#endif  // ARRANGELINE_SERVICE_HPP
