/**
 * Reflection side of the loop: browse the catalog, open the stories an
 * artwork appears in, read a story with its annotations, then explore
 * the similar/opposite story panels. All emotional links come from the
 * service; panels display the linking emotion pair as the explanation.
 */

import type { ApiClient } from "../api.js";
import type { AppConfig } from "../config.js";
import type { CatalogItem, RelationKind, StoryDocument } from "../types.js";
import { COMMENT_TEMPLATES, EMOJI_GLYPHS } from "../types.js";
import { clear, el } from "./dom.js";

const PANEL_LABELS: Record<RelationKind, string> = {
  similar: "≈ Similar emotions",
  opposite: "↔ Opposite emotions",
  same: "● Same emotions",
};

export class BrowseView {
  readonly root: HTMLElement;

  constructor(
    private readonly api: ApiClient,
    private readonly catalog: CatalogItem[],
    private readonly config: AppConfig,
  ) {
    this.root = el("section", { class: "browse", "data-testid": "browse-view" });
    this.showCatalog();
  }

  private showCatalog(): void {
    clear(this.root);
    const grid = el("div", { class: "catalog-grid" });
    for (const item of this.catalog) {
      const card = el(
        "button",
        { class: "artwork-card", "data-artwork": item.id, title: item.title },
        el("span", { class: "thumb" }, "\u{1f5bc}"),
        el("span", { class: "card-title" }, item.title || item.id),
      );
      card.addEventListener("click", () => void this.showStoriesFor(item));
      grid.append(card);
    }
    this.root.append(el("h2", {}, "\u{1f50d} Browse the collection"), grid);
  }

  private async showStoriesFor(item: CatalogItem): Promise<void> {
    clear(this.root);
    this.root.append(el("h2", {}, `\u{1f4da} Stories with "${item.title || item.id}"`));
    let stories: StoryDocument[];
    try {
      stories = (await this.api.storiesWithItem(item.id)).stories;
    } catch {
      this.root.append(this.retryBanner(() => void this.showStoriesFor(item)));
      return;
    }
    if (stories.length === 0) {
      this.root.append(
        el("p", { class: "empty-state", "data-testid": "empty-state" }, "\u{1f4ed} No stories yet"),
      );
      return;
    }
    const list = el("div", { class: "story-list", "data-testid": "story-list" });
    for (const story of stories) {
      const card = el(
        "button",
        { class: "story-card", "data-story": story.id },
        el("span", { class: "card-title" }, story.title || story.id),
        el("span", { class: "card-sub" }, `${story.items.length} artwork(s)`),
      );
      card.addEventListener("click", () => void this.showStory(story.id));
      list.append(card);
    }
    this.root.append(list);
  }

  async showStory(storyId: string): Promise<void> {
    clear(this.root);
    let story: StoryDocument;
    try {
      story = await this.api.story(storyId);
    } catch {
      this.root.append(this.retryBanner(() => void this.showStory(storyId)));
      return;
    }
    const view = el("article", { class: "story-view", "data-testid": "story-view" });
    view.append(el("h2", {}, `\u{1f4d6} ${story.title || story.id}`));
    for (const item of story.items) {
      const artwork = this.catalog.find((c) => c.id === item.itemId);
      const annotations = el("div", { class: "story-annotations" });
      for (const emoji of item.emojis) {
        annotations.append(
          el("span", { class: "placed-emoji" }, EMOJI_GLYPHS[emoji] ?? emoji),
        );
      }
      for (const tag of item.tags) {
        annotations.append(el("span", { class: "tag-chip" }, `#${tag}`));
      }
      for (const [key, template] of Object.entries(COMMENT_TEMPLATES)) {
        const text = item.comments[key as keyof typeof item.comments];
        if (text) {
          annotations.append(
            el("p", { class: "comment" }, `${template.icon} ${template.prompt} ${text}`),
          );
        }
      }
      view.append(
        el(
          "div",
          { class: "story-item" },
          el("h3", {}, artwork?.title ?? item.itemId),
          annotations,
        ),
      );
    }
    this.root.append(view);

    const kinds: RelationKind[] = this.config.showSamePanel
      ? ["similar", "opposite", "same"]
      : ["similar", "opposite"];
    for (const kind of kinds) {
      this.root.append(await this.panel(storyId, kind));
    }
  }

  /** One recommendation panel; entries show the linking pair. */
  private async panel(storyId: string, kind: RelationKind): Promise<HTMLElement> {
    const panel = el("section", { class: `panel ${kind}`, "data-panel": kind });
    panel.append(el("h3", {}, PANEL_LABELS[kind]));
    try {
      const response = await this.api.recommendations(storyId, kind);
      if (response.entries.length === 0) {
        panel.append(el("p", { class: "empty-state" }, "\u{1f4ed} Nothing here yet"));
        return panel;
      }
      for (const entry of response.entries) {
        const card = el(
          "button",
          {
            class: "story-card recommended",
            "data-entry": entry.storyId,
            "data-pair": `${entry.pair[0]}:${entry.pair[1]}`,
          },
          el("span", { class: "card-title" }, entry.title || entry.storyId),
          el("span", { class: "pair-explanation" }, `${entry.pair[0]} → ${entry.pair[1]}`),
        );
        card.addEventListener("click", () => void this.showStory(entry.storyId));
        panel.append(card);
      }
    } catch {
      panel.append(this.retryBanner(() => void this.showStory(storyId)));
    }
    return panel;
  }

  private retryBanner(retry: () => void): HTMLElement {
    const banner = el(
      "div",
      { class: "retry-banner", "data-testid": "retry-banner" },
      el("span", {}, "⚠ Service unreachable"),
    );
    const button = el("button", { class: "icon", title: "retry" }, "↻ Retry");
    button.addEventListener("click", retry);
    banner.append(button);
    return banner;
  }
}
