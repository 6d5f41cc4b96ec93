#pragma once

#include "qp/error.hpp"
#include "qp/json_io.hpp"

#include <string>

namespace qp {

struct Reply {
    int status = 200;
    Json body;
};

int http_status(ErrorClass c);

// Pipeline entry points shared by the command line and the HTTP service.
// Each takes and returns the module JSON forms and throws qp::Error.
Triangulation triangulate(const GroupData& g, const std::string& method);

Json api_triangulate(const Json& req);
Json api_flip(const Json& req);
Json api_curve_quiver(const Json& req);
Json api_mutate(const Json& req);
Json api_quiver_set(const Json& req);
Json api_flip_graph(const Json& req);
Json api_find_potential(const Json& req);
Json api_verify(const Json& req);

// Routes "/api/..." POST bodies; unknown routes give a 404 error body.
Reply handle(const std::string& route, const std::string& body);

} // namespace qp
