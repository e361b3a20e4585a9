// Copyright 2026 The QADL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qadl/service/server.hpp"

#include <httplib.h>

#include "qadl/service/api.hpp"

namespace qadl::service {
namespace {

constexpr const char* kPlaceholderPage =
    "<!doctype html>\n"
    "<html><head><meta charset=\"utf-8\"><title>QADL</title></head>\n"
    "<body><h1>QADL service</h1>\n"
    "<p>No UI assets are installed. Start the server with "
    "<code>--static-dir</code> to serve them here.</p>\n"
    "<p>API: POST /api/parse, /api/render, /api/simulate, /api/export; "
    "GET /api/health.</p>\n"
    "</body></html>\n";

void write_json(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

}  // namespace

Server::Server(ServerOptions options)
    : options_(std::move(options)), http_(std::make_unique<httplib::Server>()) {
  install_routes();
}

Server::~Server() { stop(); }

void Server::install_routes() {
  httplib::Server& s = *http_;
  s.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  // One byte over the limit so oversized bodies reach our own 413 body.
  s.set_payload_max_length(kMaxBodyBytes + 1);

  auto dispatch = [](const httplib::Request& req, httplib::Response& res) {
    write_json(res, handle(req.method, req.path, req.body));
  };
  s.Post(R"(/api/.*)", dispatch);
  s.Get(R"(/api/.*)", dispatch);
  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });

  if (!options_.static_dir.empty()) {
    s.set_mount_point("/", options_.static_dir);
  } else {
    s.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html; charset=utf-8");
    });
  }

  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const char* code = res.status == 413   ? "PayloadTooLarge"
                       : res.status == 404 ? "NotFound"
                       : res.status == 400 ? "BadRequest"
                                           : "HttpError";
    res.set_content(error_body(code, httplib::status_message(res.status)).dump(),
                    "application/json");
  });
  s.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          if (ep) std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        res.status = 500;
        res.set_content(error_body("InternalError", what).dump(), "application/json");
      });
}

int Server::bind() {
  if (options_.port == 0) {
    port_ = http_->bind_to_any_port(options_.host);
  } else {
    port_ = http_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
  }
  return port_;
}

bool Server::listen() { return http_->listen_after_bind(); }

void Server::stop() {
  if (http_) http_->stop();
}

void Server::wait_until_ready() const { http_->wait_until_ready(); }

}  // namespace qadl::service
