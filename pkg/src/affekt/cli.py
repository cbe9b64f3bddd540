"""Command-line surface: ingest, combine, classify, recommend, export, serve.

Exit codes: 0 on success, 1 on validation errors, 2 on I/O errors. All
output is deterministic so the commands can be golden-file tested.
"""

from __future__ import annotations

import json
import sys

import click

from .classify import StoryValidationError, UnknownItemError, classify_item
from .config import ConfigError, load_config
from .lexicon import LexiconFormatError
from .pipeline import (
    EmptyProfileError,
    SchemaError,
    build_profile,
    iter_item_documents,
    parse_item,
)
from .service import ConflictError, Engine, create_app
from .store import CatalogStore
from .tcl import (
    CombinationTooLargeError,
    KnowledgeBase,
    UnknownConceptError,
    combine as combine_concepts,
    prototype_to_json,
)

VALIDATION_EXIT = 1
IO_EXIT = 2

_VALIDATION_ERRORS = (
    ConfigError,
    SchemaError,
    StoryValidationError,
    UnknownItemError,
    ConflictError,
    UnknownConceptError,
    CombinationTooLargeError,
    LexiconFormatError,
    EmptyProfileError,
    ValueError,
    KeyError,
)


def _fail(exc: BaseException, code: int) -> None:
    message = str(exc) if not isinstance(exc, KeyError) else f"unknown key {exc.args[0]!r}"
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    def run(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except OSError as exc:
            _fail(exc, IO_EXIT)
        except _VALIDATION_ERRORS as exc:
            _fail(exc, VALIDATION_EXIT)

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


class _ExitCodeGroup(click.Group):
    """Exit 1 on bad command lines; exit code 2 stays reserved for I/O."""

    def main(self, *args, **kwargs):
        kwargs["standalone_mode"] = False
        try:
            super().main(*args, **kwargs)
        except click.UsageError as exc:
            click.echo(f"error: {exc.format_message()}", err=True)
            sys.exit(VALIDATION_EXIT)
        except click.exceptions.Exit as exc:
            sys.exit(exc.exit_code)
        except click.Abort:
            click.echo("aborted", err=True)
            sys.exit(VALIDATION_EXIT)


@click.group(cls=_ExitCodeGroup)
@click.option("--store", "store_path", default="./catalog", show_default=True,
              help="Catalog directory (created on demand).")
@click.option("--config", "config_path", default=None,
              help="JSON config file; AFFEKT_CONFIG is honored too.")
@click.pass_context
def main(ctx, store_path, config_path):
    """Affective catalog: emotion prototypes, classification, recommendations."""
    ctx.ensure_object(dict)
    ctx.obj["store_path"] = store_path
    ctx.obj["config_path"] = config_path


def _engine(ctx, **overrides) -> Engine:
    config = load_config(ctx.obj["config_path"], **overrides)
    return Engine(CatalogStore(ctx.obj["store_path"]), config)


@main.command()
@click.option("--items", "items_path", required=True, type=click.Path())
@click.option("--lexicon", "lexicon_path", required=True, type=click.Path())
@click.option("--top-k", type=int, default=None, help="Typical terms kept per basic emotion.")
@click.pass_context
@_guarded
def ingest(ctx, items_path, lexicon_path, top_k):
    """Build prototypes from a lexicon, then classify a batch of items."""
    engine = _engine(ctx, top_k=top_k, lexicon=lexicon_path)
    engine.ingest_lexicon(lexicon_path)
    count = 0
    for document in iter_item_documents(items_path):
        result, _created = engine.add_item(document)
        emotions = ", ".join(e["emotion"] for e in result["emotions"]) or "-"
        click.echo(f"item {result['id']}: {emotions}")
        count += 1
    click.echo(f"ingested {count} items, {len(engine.store.prototypes)} compound prototypes")


@main.command()
@click.option("--head", required=True)
@click.option("--modifier", required=True)
@click.pass_context
@_guarded
def combine(ctx, head, modifier):
    """Print the prototype/1 JSON for a compound of two basic emotions."""
    engine = _engine(ctx)
    basics = engine.store.basic_prototypes
    if not basics:
        raise ValueError("no basic prototypes in store; run `ingest` first")
    kb = KnowledgeBase()
    for name, prototype in basics.items():
        for lit in prototype.rigid:
            kb.add_rigid(name, lit)
        for prop in prototype.typical:
            kb.add_typical(name, prop.prop, prop.degree)
    head, modifier = head.lower(), modifier.lower()
    try:
        concept = engine.wheel.dyad_for(head, modifier).name
    except KeyError:
        concept = None
    prototype = combine_concepts(kb, head, modifier, concept=concept)
    click.echo(prototype_to_json(prototype), nl=False)


@main.command()
@click.option("--item", "item_path", required=True, type=click.Path())
@click.pass_context
@_guarded
def classify(ctx, item_path):
    """Classify one item/1 JSON file against the stored prototypes."""
    engine = _engine(ctx)
    if not engine.ready:
        raise ValueError("no prototypes in store; run `ingest` first")
    with open(item_path, encoding="utf-8") as handle:
        record = parse_item(handle.read())
    profile = build_profile(record, engine.config.stopwords())
    assignments = classify_item(
        profile,
        engine.classification_prototypes(),
        engine.config.threshold,
        translation=engine.translation,
    )
    click.echo(
        json.dumps(
            {
                "id": record.id,
                "emotions": [
                    {"emotion": a.emotion, "score": a.score, "matched": list(a.matched_terms)}
                    for a in assignments
                ],
            },
            indent=2,
        )
    )


@main.command()
@click.option("--story", "story_id", required=True)
@click.option("--kind", required=True)
@click.option("--limit", type=int, default=5, show_default=True)
@click.pass_context
@_guarded
def recommend(ctx, story_id, kind, limit):
    """Print ranked story recommendations for a stored story."""
    engine = _engine(ctx)
    click.echo(json.dumps(engine.recommendations(story_id, kind, limit), indent=2))


@main.command()
@click.option("--triples", "triples_path", required=True, type=click.Path())
@click.pass_context
@_guarded
def export(ctx, triples_path):
    """Write the catalog's emotion assignments as N-Triples."""
    engine = _engine(ctx)
    text = engine.triples()
    with open(triples_path, "w", encoding="utf-8") as handle:
        handle.write(text)
    click.echo(f"wrote {len(text.splitlines())} triples to {triples_path}")


@main.command()
@click.option("--port", type=int, default=None, help="Port to listen on.")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.pass_context
@_guarded
def serve(ctx, port, host):
    """Run the HTTP service."""
    import uvicorn

    engine = _engine(ctx, port=port)
    if not engine.ready and engine.config.lexicon:
        engine.ingest_lexicon(engine.config.lexicon)
    app = create_app(engine)
    uvicorn.run(app, host=host, port=engine.config.port, log_level="warning")


if __name__ == "__main__":
    main()
