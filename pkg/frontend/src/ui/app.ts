/** Application shell: icon-first navigation between create and browse. */

import { ApiClient, loadCatalog } from "../api.js";
import type { AppConfig } from "../config.js";
import { defaultConfig } from "../config.js";
import type { CatalogItem } from "../types.js";
import { BrowseView } from "./browse.js";
import { CreateStoryFlow } from "./creation.js";
import { clear, el } from "./dom.js";

export class App {
  readonly root: HTMLElement;
  private readonly api: ApiClient;
  private readonly main: HTMLElement;
  private catalog: CatalogItem[] = [];

  constructor(
    private readonly config: AppConfig = defaultConfig,
    fetchFn: typeof fetch = fetch,
  ) {
    this.api = new ApiClient(config.baseUrl, fetchFn);
    this.main = el("main", { class: "app-main" });
    this.root = el(
      "div",
      { class: "app" },
      el(
        "nav",
        { class: "app-nav" },
        this.navButton("✏️", "Create", () => this.showCreate()),
        this.navButton("\u{1f5bc}", "Browse", () => this.showBrowse()),
      ),
      this.main,
    );
  }

  private navButton(icon: string, label: string, go: () => void): HTMLElement {
    const button = el(
      "button",
      { class: "nav-button", "data-nav": label.toLowerCase(), title: label },
      el("span", { class: "nav-icon" }, icon),
      el("span", { class: "nav-label" }, label),
    );
    button.addEventListener("click", go);
    return button;
  }

  async start(catalog?: CatalogItem[]): Promise<void> {
    this.catalog = catalog ?? (await loadCatalog(this.config.catalogUrl));
    this.showBrowse();
  }

  showCreate(): void {
    clear(this.main);
    const flow = new CreateStoryFlow(this.api, this.catalog, this.config.creatorId, (storyId) => {
      this.showBrowse(storyId);
    });
    this.main.append(flow.root);
  }

  showBrowse(storyId?: string): void {
    clear(this.main);
    const view = new BrowseView(this.api, this.catalog, this.config);
    this.main.append(view.root);
    if (storyId) void view.showStory(storyId);
  }
}

/** Browser entry point; tests drive App directly instead. */
export function mount(root: HTMLElement, overrides: Partial<AppConfig> = {}): App {
  const app = new App({ ...defaultConfig, ...overrides });
  root.append(app.root);
  void app.start();
  return app;
}
