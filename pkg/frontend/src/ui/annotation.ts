/**
 * Annotation console for one artwork: emoji palette with free placement,
 * tags, and the three affirmative comment templates. The continue
 * buttons stay disabled until the draft's annotation gate opens.
 */

import type { StoryDraft } from "../draft.js";
import type { CatalogItem, CommentKey, EmojiName } from "../types.js";
import { COMMENT_TEMPLATES, EMOJI_GLYPHS, EMOJI_NAMES } from "../types.js";
import { clear, el } from "./dom.js";

export interface AnnotationCallbacks {
  onAddAnother: () => void;
  onFinish: () => void;
}

export class AnnotationConsole {
  readonly root: HTMLElement;
  private readonly canvas: HTMLElement;
  private readonly tagList: HTMLElement;
  private readonly nextButton: HTMLButtonElement;
  private readonly finishButton: HTMLButtonElement;

  constructor(
    private readonly draft: StoryDraft,
    private readonly artwork: CatalogItem,
    private readonly callbacks: AnnotationCallbacks,
  ) {
    this.canvas = el("div", { class: "artwork-canvas", "data-testid": "artwork-canvas" });
    this.tagList = el("div", { class: "tag-list" });
    this.nextButton = el(
      "button",
      { class: "primary", "data-testid": "next-artwork" },
      "➕ Add artwork",
    );
    this.finishButton = el(
      "button",
      { class: "primary", "data-testid": "finish-selection" },
      "✔ Done",
    );
    this.nextButton.addEventListener("click", () => {
      if (this.draft.canAdvance()) this.callbacks.onAddAnother();
    });
    this.finishButton.addEventListener("click", () => {
      if (this.draft.canAdvance()) this.callbacks.onFinish();
    });
    this.root = this.render();
    this.refresh();
  }

  private render(): HTMLElement {
    const palette = el("div", { class: "emoji-palette", role: "toolbar" });
    for (const name of EMOJI_NAMES) {
      const button = el(
        "button",
        { class: "emoji-button", title: name, "data-emoji": name },
        EMOJI_GLYPHS[name],
      );
      button.addEventListener("click", () => {
        this.draft.addEmoji(name, 0.5, 0.5);
        this.refresh();
      });
      palette.append(button);
    }

    const tagInput = el("input", {
      class: "tag-input",
      placeholder: "# tag",
      "data-testid": "tag-input",
    });
    const tagAdd = el("button", { class: "icon", title: "add tag" }, "➕");
    tagAdd.addEventListener("click", () => {
      this.draft.addTag(tagInput.value);
      tagInput.value = "";
      this.refresh();
    });

    const tabs = el("div", { class: "comment-tabs", role: "tablist" });
    for (const key of Object.keys(COMMENT_TEMPLATES) as CommentKey[]) {
      const template = COMMENT_TEMPLATES[key];
      const input = el("input", {
        class: "comment-input",
        placeholder: template.prompt,
        "data-comment": key,
      });
      input.addEventListener("input", () => {
        this.draft.setComment(key, input.value);
        this.refresh();
      });
      tabs.append(
        el("label", { class: "comment-tab" }, el("span", { class: "icon" }, template.icon), input),
      );
    }

    return el(
      "section",
      { class: "annotation", "data-testid": "annotation-console" },
      el("h2", {}, `\u{1f58c} ${this.artwork.title || this.artwork.id}`),
      this.canvas,
      palette,
      el("div", { class: "tag-row" }, tagInput, tagAdd, this.tagList),
      tabs,
      el("div", { class: "advance-row" }, this.nextButton, this.finishButton),
    );
  }

  /** Re-render placed annotations and the gate state. */
  refresh(): void {
    clear(this.canvas);
    const { emojis, tags } = this.draft.currentAnnotations();
    emojis.forEach((placed, index) => {
      const chip = el(
        "button",
        {
          class: "placed-emoji",
          title: `${placed.name} (tap to remove)`,
          style: `left:${placed.x * 100}%;top:${placed.y * 100}%`,
        },
        EMOJI_GLYPHS[placed.name as EmojiName] ?? placed.name,
      );
      chip.addEventListener("click", () => {
        this.draft.removeEmoji(index);
        this.refresh();
      });
      this.canvas.append(chip);
    });
    clear(this.tagList);
    tags.forEach((tag, index) => {
      const chip = el("button", { class: "tag-chip", title: "remove tag" }, `#${tag}`);
      chip.addEventListener("click", () => {
        this.draft.removeTag(index);
        this.refresh();
      });
      this.tagList.append(chip);
    });
    const gateOpen = this.draft.canAdvance();
    this.nextButton.disabled = !gateOpen || !this.draft.canAddAnother;
    this.finishButton.disabled = !gateOpen || !this.draft.canFinish;
    this.nextButton.title = gateOpen ? "add another artwork" : "annotate first";
    this.finishButton.title = gateOpen ? "finish the story" : "annotate first";
  }
}
