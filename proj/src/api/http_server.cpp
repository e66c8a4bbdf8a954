// Copyright 2026 The SynopsViz Authors
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

#include "synopsviz/api/http_server.hpp"

#include <cstdlib>

#include <httplib.h>

namespace synopsviz::api {

struct HttpServer::Impl {
  Impl(Service& svc, ServerOptions opts) : service(svc), options(std::move(opts)) {}

  Service& service;
  ServerOptions options;
  httplib::Server server;
};

namespace {

Request translate(const httplib::Request& in) {
  Request out;
  out.method = in.method;
  out.path = in.path;
  for (const auto& [k, v] : in.params) out.query.insert_or_assign(k, v);
  out.contentType = in.get_header_value("Content-Type");
  if (in.is_multipart_form_data()) {
    for (const auto& [field, part] : in.files) {
      if (field == "file" && !out.upload) {
        out.upload = Upload{part.filename, part.content};
      } else {
        out.form.insert_or_assign(field, part.content);
      }
    }
  } else {
    out.body = in.body;
  }
  return out;
}

void respond(const Response& r, httplib::Response& out) {
  out.status = r.status;
  for (const auto& [k, v] : r.headers) out.set_header(k, v);
  if (!r.contentType.empty()) out.set_content(r.body, r.contentType);
}

}  // namespace

ServerOptions ServerOptions::fromEnvironment() {
  ServerOptions o;
  if (const char* port = std::getenv("SYNOPSVIZ_PORT"); port && *port) o.port = std::atoi(port);
  return o;
}

HttpServer::HttpServer(Service& service, ServerOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    respond(impl_->service.handle(translate(req)), res);
  };
  auto& s = impl_->server;
  s.set_payload_max_length(impl_->options.maxUploadBytes);
  s.Get(".*", handler);
  s.Post(".*", handler);
  s.Options(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& s = impl_->server;
  if (impl_->options.port == 0) return s.bind_to_any_port(impl_->options.host);
  return s.bind_to_port(impl_->options.host, impl_->options.port) ? impl_->options.port : -1;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace synopsviz::api
