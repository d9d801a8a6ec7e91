"""Remote text-completion backend.

Wire protocol: HTTP POST of JSON ``{prompt, max_tokens, temperature,
stop, n}`` to the configured endpoint; the response carries a JSON list
of ``{text}`` choices (completion-API shape). Credentials come from the
``KOGITO_API_KEY`` environment variable (endpoint base from
``KOGITO_API_URL``) unless set explicitly.

Transient transport failures are retried with exponential backoff up to
a bounded attempt budget. Per-tuple API failures leave that tuple's tails
empty and are reported as diagnostics instead of aborting the batch;
connection-level failures raise, carrying the partial results.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import requests

from ..core.knowledge import KnowledgeGraph, KnowledgeTuple
from ..core.relations import RelationRegistry, build_few_shot_prompt, default_registry
from ..errors import ApiError, CredentialError, TransportError, ValidationError
from .base import DecodeConfig, GenerationFailure, KnowledgeModel

logger = logging.getLogger(__name__)

API_KEY_ENV = "KOGITO_API_KEY"
API_URL_ENV = "KOGITO_API_URL"


@dataclass
class CompletionRequest:
    prompt: str
    max_tokens: int = 24
    temperature: float = 0.0
    stop_sequences: tuple[str, ...] = ("\n",)
    n_samples: int = 1

    def __post_init__(self):
        if not self.prompt:
            raise ValidationError("prompt must be non-empty")
        if self.max_tokens < 1:
            raise ValidationError("max_tokens must be >= 1")
        if self.n_samples < 1:
            raise ValidationError("n_samples must be >= 1")
        if self.temperature < 0:
            raise ValidationError("temperature must be non-negative")


@dataclass
class CompletionEndpoint:
    """Connection settings for the completion API."""

    url: str | None = None
    api_key: str | None = None
    timeout: float = 30.0
    max_attempts: int = 3
    backoff_base: float = 0.5
    max_in_flight: int = 4

    def resolved_url(self) -> str:
        url = self.url or os.environ.get(API_URL_ENV)
        if not url:
            raise CredentialError(f"no API endpoint configured (set {API_URL_ENV})")
        return url

    def resolved_key(self) -> str:
        key = self.api_key or os.environ.get(API_KEY_ENV)
        if not key:
            raise CredentialError(f"missing API key (set {API_KEY_ENV})")
        return key


def _truncate(text: str, stop_sequences: tuple[str, ...]) -> str:
    for stop in stop_sequences:
        cut = text.find(stop)
        if cut != -1:
            text = text[:cut]
    return text


def complete_via_api(endpoint: CompletionEndpoint, req: CompletionRequest,
                     session: requests.Session | None = None) -> list[str]:
    """POST the request and return ``n_samples`` completions, each
    truncated at the first stop sequence.

    The credential is checked before any network call. Connection errors
    and 5xx responses are retried up to ``max_attempts`` with exponential
    backoff; other non-success statuses raise immediately.
    """
    url = endpoint.resolved_url()
    key = endpoint.resolved_key()
    body = {
        "prompt": req.prompt,
        "max_tokens": req.max_tokens,
        "temperature": req.temperature,
        "stop": list(req.stop_sequences),
        "n": req.n_samples,
    }
    headers = {"Authorization": f"Bearer {key}"}
    own_session = session is None
    session = session or requests.Session()
    try:
        last_error: Exception | None = None
        for attempt in range(endpoint.max_attempts):
            if attempt:
                time.sleep(endpoint.backoff_base * (2 ** (attempt - 1)))
            try:
                response = session.post(url, json=body, headers=headers,
                                        timeout=endpoint.timeout)
            except requests.RequestException as e:
                last_error = e
                logger.debug("completion attempt %d failed: %s", attempt + 1, e)
                continue
            if response.status_code in (401, 403):
                raise CredentialError(f"API rejected credentials (status {response.status_code})")
            if 500 <= response.status_code < 600:
                last_error = ApiError("server error", status=response.status_code,
                                      body=response.text)
                continue
            if response.status_code != 200:
                raise ApiError("unexpected response", status=response.status_code,
                               body=response.text)
            try:
                payload = response.json()
                choices = payload["choices"]
                texts = [c["text"] for c in choices]
            except (ValueError, KeyError, TypeError) as e:
                raise ApiError(f"malformed response body: {e}",
                               status=response.status_code, body=response.text) from e
            return [_truncate(t, req.stop_sequences) for t in texts]
        if isinstance(last_error, ApiError):
            raise last_error
        raise TransportError(f"endpoint unreachable after {endpoint.max_attempts} attempts: "
                             f"{last_error}")
    finally:
        if own_session:
            session.close()


class CompletionAPIModel(KnowledgeModel):
    """Knowledge model backed by the remote completion endpoint.

    Prompts use each relation's verbalizer: zero-shot by default, or
    few-shot when a sample graph is supplied (samples are grouped by
    relation; relations with no samples fall back to zero-shot).
    """

    def __init__(self, endpoint: CompletionEndpoint | None = None,
                 registry: RelationRegistry | None = None,
                 samples: KnowledgeGraph | None = None):
        self.endpoint = endpoint or CompletionEndpoint()
        self.registry = registry or default_registry()
        self._samples_by_relation: dict[str, KnowledgeGraph] = {}
        if samples is not None:
            for t in samples:
                self._samples_by_relation.setdefault(t.relation, KnowledgeGraph()).append(t)

    def prompt_for(self, tup: KnowledgeTuple) -> str:
        samples = self._samples_by_relation.get(tup.relation)
        if samples is not None and len(samples):
            rel = self.registry[tup.relation]
            return build_few_shot_prompt(rel, samples, tup.head)
        return self.registry.verbalize_name(tup.relation, tup.head.text)

    def generate(self, partial: KnowledgeGraph,
                 decode: DecodeConfig | None = None) -> KnowledgeGraph:
        graph, failures = self.generate_with_diagnostics(partial, decode)
        for f in failures:
            logger.warning("tuple %d (%s, %s): %s", f.index, f.head, f.relation, f.error)
        return graph

    def generate_with_diagnostics(
            self, partial: KnowledgeGraph,
            decode: DecodeConfig | None = None) -> tuple[KnowledgeGraph, list[GenerationFailure]]:
        decode = decode or DecodeConfig()
        # fail before any network call when unconfigured
        self.endpoint.resolved_url()
        self.endpoint.resolved_key()
        tuples = list(partial)
        results: list[list[str] | Exception] = [[] for _ in tuples]

        def fetch(i: int) -> None:
            req = CompletionRequest(
                prompt=self.prompt_for(tuples[i]),
                max_tokens=decode.max_tokens,
                temperature=decode.temperature,
                stop_sequences=tuple(decode.stop),
                n_samples=decode.n_samples,
            )
            try:
                completions = complete_via_api(self.endpoint, req)
                tails = []
                for text in completions:
                    tail = text.strip()
                    if tail and tail not in tails:
                        tails.append(tail)
                results[i] = tails
            except Exception as e:  # collected per tuple, classified below
                results[i] = e

        max_workers = max(1, self.endpoint.max_in_flight)
        if tuples:
            with ThreadPoolExecutor(max_workers=max_workers) as pool:
                list(pool.map(fetch, range(len(tuples))))

        failures: list[GenerationFailure] = []
        out = KnowledgeGraph()
        transport: TransportError | None = None
        for i, (tup, res) in enumerate(zip(tuples, results)):
            if isinstance(res, Exception):
                if isinstance(res, (CredentialError,)):
                    raise res
                if isinstance(res, TransportError) and not isinstance(res, ApiError):
                    transport = res
                failures.append(GenerationFailure(i, tup.head.text, tup.relation, str(res)))
                out.append(tup.with_tails([]))
            else:
                out.append(tup.with_tails(res))
        if transport is not None:
            raise TransportError(str(transport), partial=out)
        return out, failures
