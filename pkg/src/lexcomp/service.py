"""Read-only HTTP API over a built index and optional embedding vectors.

The app is stateless across requests: the index and vector table are loaded
once at startup and only read afterwards, so identical requests always get
identical responses. Text sent to /analyze goes through the fallback
tokenizer unless the request carries pre-annotated token rows, in which case
the supplied UPOS tags decide which tokens count as content words.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import embeddings as emb
from . import lexindex, metrics
from .corpus import CONTENT_POS, Token, ingest_plain, make_document, map_upos
from .errors import EmptyDocument, EmptySuggestions, UnknownWord
from .lexindex import LexIndex


class TokenIn(BaseModel):
    """Pre-annotated token mirroring the CoNLL-U FORM/LEMMA/UPOS columns."""

    form: str
    lemma: str = ""
    upos: str = "X"


class AnalyzeRequest(BaseModel):
    text: str = ""
    tokens: list[list[TokenIn]] | None = None


class TokenOut(BaseModel):
    surface: str
    lemma: str
    pos: str
    cs: float | None
    content_word: bool


class AnalyzeResponse(BaseModel):
    tokens: list[TokenOut]
    sentence_lix: float
    band: str


class SuggestionOut(BaseModel):
    lemma: str
    cosine_similarity: float
    cs: float | None
    n: int | None


class EntryOut(BaseModel):
    lemma: str
    pos: str
    n: int
    median_lix: float
    cs: float


class HealthOut(BaseModel):
    status: str
    m: int
    entries: int
    dim: int | None


def _annotate(index: LexIndex, token: Token, annotated: bool) -> TokenOut:
    """Attach the indexed complexity score to one token.

    With annotated input the tag is trusted: content-word tokens look up
    their own (lemma, pos) entry, anything else gets no score. Fallback
    tokens have an unknown tag, so any content-word reading of the lemma
    counts and its first indexed entry provides the score.
    """
    if token.pos in CONTENT_POS:
        entries = lexindex.lookup(index, token.lemma, token.pos)
        cs = entries[0].cs if entries else None
        content = True
    elif annotated:
        cs = None
        content = False
    else:
        entries = lexindex.lookup(index, token.lemma)
        cs = entries[0].cs if entries else None
        content = bool(entries)
    return TokenOut(
        surface=token.surface,
        lemma=token.lemma,
        pos=token.pos.name,
        cs=cs,
        content_word=content,
    )


def create_app(
    index: LexIndex,
    table: emb.EmbeddingTable | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    app = FastAPI(title="lexcomp service")
    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=cors_origins,
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.get("/health", response_model=HealthOut)
    def health() -> HealthOut:
        return HealthOut(
            status="ok",
            m=index.m,
            entries=len(index.entries),
            dim=table.dim if table else None,
        )

    @app.post("/analyze", response_model=AnalyzeResponse)
    def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
        annotated = bool(req.tokens)
        try:
            if annotated:
                sentences = [
                    [
                        Token.make(t.form, (t.lemma or t.form).lower(), map_upos(t.upos))
                        for t in sentence
                        if t.form
                    ]
                    for sentence in req.tokens
                ]
                doc = make_document("request", "request", sentences)
            else:
                doc = ingest_plain(req.text, "request", "request")
        except EmptyDocument:
            raise HTTPException(status_code=400, detail="no token with a letter in input")
        tokens = [
            _annotate(index, token, annotated)
            for sentence in doc.sentences
            for token in sentence
        ]
        return AnalyzeResponse(
            tokens=tokens,
            sentence_lix=doc.stats.lix,
            band=metrics.lix_band(doc.stats.lix).label,
        )

    @app.get("/suggest", response_model=list[SuggestionOut])
    def suggest(lemma: str, k: int = 10, exclude: str = "") -> list[SuggestionOut]:
        if table is None:
            raise HTTPException(status_code=409, detail="no vectors loaded")
        excluded = {w for w in exclude.split(",") if w}
        try:
            result = emb.suggest(index, table, lemma, k, excluded)
        except UnknownWord:
            raise HTTPException(
                status_code=404, detail=f"{lemma!r} not in embedding vocabulary"
            )
        except EmptySuggestions:
            return []
        return [
            SuggestionOut(
                lemma=s.lemma, cosine_similarity=s.cosine_similarity, cs=s.cs, n=s.n
            )
            for s in result
        ]

    @app.get("/lemma/{lemma}", response_model=list[EntryOut])
    def lemma_entries(lemma: str) -> list[EntryOut]:
        entries = lexindex.lookup(index, lemma)
        if not entries:
            raise HTTPException(status_code=404, detail=f"{lemma!r} not in index")
        return [
            EntryOut(
                lemma=e.lemma, pos=e.pos.name, n=e.n, median_lix=e.median_lix, cs=e.cs
            )
            for e in entries
        ]

    return app
